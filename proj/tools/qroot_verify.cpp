#include <iostream>

#include "qroot/cli/options.hpp"
#include "qroot/cli/run.hpp"

int main(int argc, char** argv) {
  try {
    qroot::ParsedArgs args = qroot::parse_args(argc, argv, std::cout, std::cerr);
    if (args.exit_now) return args.exit_code;
    return qroot::run(args.config, std::cout, std::cerr);
  } catch (const qroot::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
