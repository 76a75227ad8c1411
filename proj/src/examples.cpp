#include "imult/examples.hpp"

namespace imult {

const std::vector<GoldenExample>& golden_examples() {
    static const std::vector<GoldenExample> kExamples = {
        {"ellipse-circle", "5x^2+6xy+5y^2-10y", "x^2+(y-1)^2-1", 3},
        {"tacnode-ramphoid", "2x^4-3x^2y+y^2-2y^3+y^4", "x^4+x^2y^2-2x^2y-xy^2+y^2", 9},
        {"lemniscate-fourleaves", "(x^2+y^2)^2-(x^2-y^2)", "(x^2+y^2)^3-(x^2-y^2)^2", 12},
    };
    return kExamples;
}

}  // namespace imult
