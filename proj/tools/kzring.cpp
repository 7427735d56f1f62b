#include <iostream>

int main() {
  std::cout << "kzring: placeholder\n";
  return 2;
}
