#include "imult/report.hpp"

#include <sstream>

namespace imult {

std::string render_value(const IMValue& v) {
    return v.infinite ? "infinity" : std::to_string(v.value);
}

namespace {

std::string root_label(const ConfigNode& n) {
    if (n.chart == 0) return "P";
    std::ostringstream os;
    os << "chart " << n.chart << ", ";
    if (n.root_minpoly) {
        os << "y = root of " << n.root_minpoly->str("y") << " (" << n.conjugate_count
           << " conjugates)";
    } else {
        os << "y = " << (n.root ? n.root->str() : "?");
        if (n.conjugate_count != 1) os << " (" << n.conjugate_count << " conjugates)";
    }
    return os.str();
}

void render_node(const ConfigNode& n, std::ostream& os) {
    for (int i = 0; i < n.depth; ++i) os << "  ";
    os << "[depth " << n.depth << "] " << root_label(n) << ": m = " << n.m_f << "*" << n.m_g
       << ", subtotal " << n.subtree_value << "\n";
    for (const ConfigNode& c : n.children) render_node(c, os);
}

nlohmann::json node_to_json(const ConfigNode& n) {
    nlohmann::json j;
    j["depth"] = n.depth;
    j["chart"] = n.chart;
    j["root"] = n.root ? nlohmann::json(n.root->str()) : nlohmann::json(nullptr);
    j["minpoly"] =
        n.root_minpoly ? nlohmann::json(n.root_minpoly->str("y")) : nlohmann::json(nullptr);
    j["conjugates"] = n.conjugate_count;
    j["m_f"] = n.m_f;
    j["m_g"] = n.m_g;
    j["subtotal"] = n.subtree_value;
    nlohmann::json kids = nlohmann::json::array();
    for (const ConfigNode& c : n.children) kids.push_back(node_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

}  // namespace

std::string render_trace(const IMReport& report) {
    std::ostringstream os;
    if (!report.tree) {
        os << "value " << render_value(report.value) << " (no shared configuration tree)\n";
        return os.str();
    }
    render_node(*report.tree, os);
    os << "value " << render_value(report.value) << "\n";
    return os.str();
}

nlohmann::json report_to_json(const IMReport& report) {
    nlohmann::json j;
    if (report.value.infinite)
        j["value"] = "infinity";
    else
        j["value"] = report.value.value;
    j["tree"] = report.tree ? node_to_json(*report.tree) : nlohmann::json(nullptr);
    j["stats"] = {{"blowups", report.stats.blowup_count},
                  {"max_depth", report.stats.max_depth},
                  {"extensions", report.stats.extensions_created},
                  {"micros", report.stats.elapsed_micros}};
    return j;
}

}  // namespace imult
