#include "helly/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helly/errors.hpp"

namespace helly {

using nlohmann::json;

namespace {

json descriptor_to_json(const GridDescriptor& d) {
    json g;
    g["kind"] = d.kind;
    for (const auto& [k, v] : d.params) g[k] = v;
    if (!d.explicit_elements.empty()) {
        json elems = json::array();
        for (const Int& e : d.explicit_elements) elems.push_back(to_decimal(e));
        g["elements"] = std::move(elems);
    }
    return g;
}

GridDescriptor descriptor_from_json(const json& g) {
    if (!g.is_object()) throw ParseError("certificate: \"grid\" must be an object");
    GridDescriptor d;
    for (const auto& [key, value] : g.items()) {
        if (key == "kind") {
            if (!value.is_string()) throw ParseError("certificate: grid kind must be a string");
            d.kind = value.get<std::string>();
        } else if (key == "elements") {
            if (!value.is_array()) throw ParseError("certificate: grid elements must be an array");
            for (const auto& e : value) {
                if (!e.is_string()) throw ParseError("certificate: grid element must be a decimal string");
                d.explicit_elements.push_back(int_from_decimal(e.get<std::string>()));
            }
        } else {
            if (!value.is_string()) {
                throw ParseError("certificate: grid parameter \"" + key + "\" must be a string");
            }
            d.params[key] = value.get<std::string>();
        }
    }
    if (d.kind.empty()) throw ParseError("certificate: grid kind missing");
    return d;
}

}  // namespace

std::string certificate_to_json(const EmptinessCertificate& cert) {
    json j;
    j["version"] = cert.version;
    j["grid"] = descriptor_to_json(cert.grid);
    json verts = json::array();
    for (const auto& v : cert.vertices) {
        verts.push_back(json::array({to_decimal(v.x), to_decimal(v.y)}));
    }
    j["vertices"] = std::move(verts);
    j["hull_ccw"] = cert.hull_ccw;
    j["method"] = cert.method;
    j["empty"] = cert.empty;
    j["implied_helly_lower_bound"] = cert.implied_helly_lower_bound;
    if (cert.search) {
        json s;
        s["strategy"] = cert.search->strategy;
        s["window"] = cert.search->window;
        s["nodes_explored"] = cert.search->nodes_explored;
        s["elapsed_ms"] = cert.search->elapsed_ms;
        j["search"] = std::move(s);
    }
    return j.dump();
}

EmptinessCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("certificate: top level must be an object");

    EmptinessCertificate cert;
    try {
        if (!j.contains("version") || !j["version"].is_number_integer()) {
            throw ParseError("certificate: integer \"version\" required");
        }
        cert.version = j["version"].get<int>();
        if (!j.contains("grid")) throw ParseError("certificate: \"grid\" required");
        cert.grid = descriptor_from_json(j["grid"]);

        if (!j.contains("vertices") || !j["vertices"].is_array()) {
            throw ParseError("certificate: \"vertices\" array required");
        }
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
                throw ParseError("certificate: vertex must be a pair of decimal strings");
            }
            cert.vertices.push_back(
                {int_from_decimal(v[0].get<std::string>()), int_from_decimal(v[1].get<std::string>())});
        }
        if (!j.contains("hull_ccw") || !j["hull_ccw"].is_array()) {
            throw ParseError("certificate: \"hull_ccw\" array required");
        }
        for (const auto& idx : j["hull_ccw"]) {
            if (!idx.is_number_unsigned() && !idx.is_number_integer()) {
                throw ParseError("certificate: hull index must be an integer");
            }
            const long long v = idx.get<long long>();
            if (v < 0) throw ParseError("certificate: hull index must be non-negative");
            cert.hull_ccw.push_back(static_cast<std::size_t>(v));
        }
        if (!j.contains("method") || !j["method"].is_string()) {
            throw ParseError("certificate: string \"method\" required");
        }
        cert.method = j["method"].get<std::string>();
        if (!j.contains("empty") || !j["empty"].is_boolean()) {
            throw ParseError("certificate: boolean \"empty\" required");
        }
        cert.empty = j["empty"].get<bool>();
        if (!j.contains("implied_helly_lower_bound") ||
            !j["implied_helly_lower_bound"].is_number()) {
            throw ParseError("certificate: \"implied_helly_lower_bound\" required");
        }
        cert.implied_helly_lower_bound = j["implied_helly_lower_bound"].get<std::size_t>();

        if (j.contains("search")) {
            const auto& s = j["search"];
            if (!s.is_object()) throw ParseError("certificate: \"search\" must be an object");
            SearchBlock block;
            if (!s.contains("strategy") || !s["strategy"].is_string() ||
                !s.contains("window") || !s["window"].is_string() ||
                !s.contains("nodes_explored") || !s["nodes_explored"].is_number() ||
                !s.contains("elapsed_ms") || !s["elapsed_ms"].is_number()) {
                throw ParseError("certificate: malformed \"search\" block");
            }
            block.strategy = s["strategy"].get<std::string>();
            block.window = s["window"].get<std::string>();
            block.nodes_explored = s["nodes_explored"].get<std::uint64_t>();
            block.elapsed_ms = s["elapsed_ms"].get<std::uint64_t>();
            cert.search = std::move(block);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    return cert;
}

EmptinessCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return certificate_from_json(buf.str());
}

void save_certificate(const EmptinessCertificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write certificate: " + path);
    out << certificate_to_json(cert) << '\n';
}

}  // namespace helly
