#include <sstream>

#include "imult/context.hpp"
#include "imult/errors.hpp"

namespace imult {

ExtensionContext ExtensionContext::rationals() {
    static const auto data = std::make_shared<const ContextData>();
    return ExtensionContext(data);
}

ExtensionContext ExtensionContext::extended(std::string name, TowerPoly modulus) const {
    const std::size_t level = size();
    if (modulus.size() < 3)
        throw internal_error("extension modulus must have degree >= 2");
    if (modulus.back() != tower::one(level))
        throw internal_error("extension modulus must be monic");
    auto data = std::make_shared<ContextData>(*d_);
    const std::uint64_t deg = modulus.size() - 1;
    if (data->absolute_degree > (std::uint64_t(1) << 40) / deg)
        throw internal_error("extension tower degree overflow");
    data->absolute_degree *= deg;
    data->generators.push_back(Generator{std::move(name), std::move(modulus)});
    return ExtensionContext(std::move(data));
}

bool ExtensionContext::compatible_with(const ExtensionContext& o) const {
    if (d_ == o.d_) return true;
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (d_->generators[i].modulus != o.d_->generators[i].modulus) return false;
    return true;
}

std::string ExtensionContext::describe() const {
    if (is_rationals()) return "Q";
    std::ostringstream os;
    os << "Q";
    for (std::size_t i = 0; i < size(); ++i) {
        const Generator& g = d_->generators[i];
        // Render the modulus as a polynomial in the generator name.
        TowerVal as_elem(TowerPoly(g.modulus));
        os << "[" << g.name << "]/(";
        // Present it one level up so the generator itself appears.
        ContextData upto;
        upto.generators.assign(d_->generators.begin(), d_->generators.begin() + i + 1);
        os << tower::to_string(as_elem, upto, i + 1) << ")";
    }
    return os.str();
}

}  // namespace imult
