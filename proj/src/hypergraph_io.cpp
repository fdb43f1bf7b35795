#include "acyclo/hypergraph_io.hpp"

#include "acyclo/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace acyclo {

namespace {

int read_int(const nlohmann::json& doc, const char* field) {
    if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
    const auto& v = doc.at(field);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
    const auto x = v.get<long long>();
    if (x < 0 || x > 1000) throw ParseError(std::string("field '") + field + "' out of range");
    return static_cast<int>(x);
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be an object with fields n, d, edges");
    const int n = read_int(doc, "n");
    const int d = read_int(doc, "d");
    if (d < 1 || n < 2 || d > n - 1)
        throw ParseError("need 1 <= d <= n-1, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
    if (!doc.contains("edges")) throw ParseError("missing field 'edges'");
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("field 'edges' must be an array");

    std::vector<Simplex> out;
    std::set<Simplex> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& e = edges[i];
        if (!e.is_array()) throw ParseError(where + " must be an array of vertices");
        if (e.size() != static_cast<std::size_t>(d) + 1)
            throw ParseError(where + " has " + std::to_string(e.size()) + " vertices, expected d+1 = " +
                             std::to_string(d + 1));
        Simplex s;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw ParseError(where + " contains a non-integer vertex");
            const auto x = v.get<long long>();
            if (x < 1 || x > n) throw ParseError(where + " vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
            s.push_back(static_cast<int>(x));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(where + " repeats a vertex");
        if (!seen.insert(s).second) throw ParseError(where + " duplicates an earlier edge");
        out.push_back(std::move(s));
    }
    return Hypergraph(n, d, std::move(out));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    nlohmann::json doc;
    doc["n"] = h.n();
    doc["d"] = h.d();
    doc["edges"] = nlohmann::json::array();
    for (const Simplex& e : h.edges()) doc["edges"].push_back(e);
    return doc.dump();
}

}  // namespace acyclo
