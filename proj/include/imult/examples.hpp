#ifndef IMULT_EXAMPLES_HPP
#define IMULT_EXAMPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace imult {

/// Built-in curve pairs with known intersection multiplicities at the
/// origin; the `examples` subcommand and the test suites run them.
struct GoldenExample {
    std::string name;
    std::string f;
    std::string g;
    std::uint64_t expected;
};

const std::vector<GoldenExample>& golden_examples();

}  // namespace imult

#endif
