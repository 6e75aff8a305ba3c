#include "logchern/arrangement_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logchern {

using nlohmann::json;

std::string to_json(const ArrangementSpec& spec, int indent) {
    json j;
    j["label"] = spec.label;
    j["genus"] = spec.genus;
    j["degree"] = spec.degree;
    j["d"] = spec.num_sections;
    if (spec.char_p) j["char_p"] = *spec.char_p;
    json fibers = json::array();
    for (const auto& fiber : spec.fibers) {
        json jf = json::array();
        for (const auto& pt : fiber.points) {
            json jp;
            jp["sections"] = pt.sections;
            bool ordinary = true;
            for (int a = 0; a < pt.size() && ordinary; ++a)
                for (int b = a + 1; b < pt.size(); ++b)
                    if (pt.contact_at(a, b) != 1) {
                        ordinary = false;
                        break;
                    }
            if (!ordinary) {
                json rows = json::array();
                for (int i = 1; i < pt.size(); ++i) {
                    json row = json::array();
                    for (int jcol = 0; jcol < i; ++jcol) row.push_back(pt.contact_at(i, jcol));
                    rows.push_back(row);
                }
                jp["contact"] = rows;
            }
            jf.push_back(jp);
        }
        fibers.push_back(jf);
    }
    j["fibers"] = fibers;
    return j.dump(indent);
}

ArrangementSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("arrangement JSON parse error: ") + e.what());
    }
    ArrangementSpec spec;
    try {
        spec.label = j.value("label", "");
        spec.genus = j.at("genus").get<int>();
        spec.degree = j.at("degree").get<std::int64_t>();
        spec.num_sections = j.at("d").get<int>();
        if (j.contains("char_p") && !j["char_p"].is_null())
            spec.char_p = j["char_p"].get<std::int64_t>();
        for (const auto& jf : j.at("fibers")) {
            FiberData fiber;
            for (const auto& jp : jf) {
                auto sections = jp.at("sections").get<std::vector<int>>();
                ContactPoint pt = ContactPoint::ordinary(sections);
                if (jp.contains("contact")) {
                    const auto& rows = jp["contact"];
                    if (rows.size() + 1 != sections.size())
                        throw std::invalid_argument("contact triangle has " + std::to_string(rows.size()) +
                                                    " rows for " + std::to_string(sections.size()) +
                                                    " sections");
                    for (int i = 1; i < pt.size(); ++i) {
                        const auto& row = rows[i - 1];
                        if (row.size() != static_cast<std::size_t>(i))
                            throw std::invalid_argument("contact row " + std::to_string(i) +
                                                        " has wrong length");
                        for (int b = 0; b < i; ++b)
                            pt.set_contact_at(i, b, row[b].get<std::int64_t>());
                    }
                }
                fiber.points.push_back(std::move(pt));
            }
            spec.fibers.push_back(std::move(fiber));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("arrangement JSON schema error: ") + e.what());
    }
    return spec;
}

ArrangementSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open arrangement file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_json(buf.str());
}

void save_spec_file(const ArrangementSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write arrangement file: " + path);
    out << to_json(spec) << "\n";
}

}  // namespace logchern
