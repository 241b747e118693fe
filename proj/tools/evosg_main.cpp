#include <iostream>
#include <string>
#include <vector>

// Placeholder entry point; replaced by the full CLI once the library lands.
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::cerr << "evosg: CLI not wired yet\n";
  return 2;
}
