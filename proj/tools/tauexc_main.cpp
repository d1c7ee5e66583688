#include <iostream>

int main() {
  std::cout << "tauexc: not wired up yet\n";
  return 0;
}
