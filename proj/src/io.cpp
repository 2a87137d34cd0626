#include "nsp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nsp {

namespace {

using nlohmann::json;

std::string format_double(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

void normalize_edges(GraphDocument& doc) {
    for (auto& [a, b] : doc.edges) {
        if (a > b) std::swap(a, b);
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& e : doc.edges) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    doc.edges = std::move(out);
}

void validate_document(const GraphDocument& doc) {
    if (doc.n < 0) throw std::invalid_argument("document: negative vertex count");
    auto check_vertex = [&](int x, const char* what) {
        if (x < 0 || x >= doc.n) {
            throw std::invalid_argument(std::string("document: ") + what + " " +
                                        std::to_string(x) + " out of range (n=" +
                                        std::to_string(doc.n) + ")");
        }
    };
    check_vertex(doc.u, "u");
    check_vertex(doc.v, "v");
    if (doc.root) check_vertex(*doc.root, "root");
    for (const auto& [a, b] : doc.edges) {
        check_vertex(a, "edge endpoint");
        check_vertex(b, "edge endpoint");
        if (a == b) {
            throw std::invalid_argument("document: self-loop at vertex " + std::to_string(a));
        }
    }
    for (const auto& t : doc.targets) {
        check_vertex(t.s, "target endpoint");
        check_vertex(t.t, "target endpoint");
    }
}

GraphDocument parse_edge_list(const std::string& text) {
    GraphDocument doc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<long> values;
        long value = 0;
        while (fields >> value) values.push_back(value);
        if (!fields.eof()) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected integers");
        }
        if (values.empty()) continue;
        if (!have_header) {
            if (values.size() != 3) {
                throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                            ": expected 'n u v'");
            }
            doc.n = static_cast<int>(values[0]);
            doc.u = static_cast<int>(values[1]);
            doc.v = static_cast<int>(values[2]);
            have_header = true;
            continue;
        }
        if (values.size() != 2) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected 'a b'");
        }
        int a = static_cast<int>(values[0]);
        int b = static_cast<int>(values[1]);
        if (a == b) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": self-loop " + std::to_string(a) + " " +
                                        std::to_string(b));
        }
        if (a < 0 || a >= doc.n || b < 0 || b >= doc.n) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": vertex id out of range (n=" + std::to_string(doc.n) +
                                        ")");
        }
        doc.edges.emplace_back(a, b);
    }
    if (!have_header) throw std::invalid_argument("edge list: empty document");
    normalize_edges(doc);
    validate_document(doc);
    return doc;
}

GraphDocument parse_structured(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("document: expected a JSON object");
    GraphDocument doc;
    if (!j.contains("n")) throw std::invalid_argument("document: missing n");
    if (!j.contains("u")) throw std::invalid_argument("document: missing u");
    if (!j.contains("v")) throw std::invalid_argument("document: missing v");
    try {
        doc.n = j.at("n").get<int>();
        doc.u = j.at("u").get<int>();
        doc.v = j.at("v").get<int>();
        if (j.contains("name")) doc.name = j.at("name").get<std::string>();
        if (j.contains("root")) doc.root = j.at("root").get<int>();
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) {
                    throw std::invalid_argument("document: edges must be [a, b] pairs");
                }
                doc.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
        }
        if (j.contains("targets")) {
            for (const auto& t : j.at("targets")) {
                if (!t.is_array() || t.size() < 2 || t.size() > 3) {
                    throw std::invalid_argument("document: targets must be [s, t] or [s, t, len]");
                }
                ForestTarget target;
                target.s = t[0].get<int>();
                target.t = t[1].get<int>();
                if (t.size() == 3 && !t[2].is_null()) target.length = t[2].get<int>();
                doc.targets.push_back(target);
            }
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
    normalize_edges(doc);
    validate_document(doc);
    return doc;
}

}  // namespace

Graph GraphDocument::to_graph() const {
    validate_document(*this);
    return build_graph(n, edges);
}

DocFormat sniff_format(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? DocFormat::Structured : DocFormat::EdgeList;
    }
    return DocFormat::EdgeList;
}

GraphDocument parse_graph(const std::string& text, DocFormat format) {
    return format == DocFormat::EdgeList ? parse_edge_list(text) : parse_structured(text);
}

std::string serialize(const GraphDocument& doc, DocFormat format) {
    if (format == DocFormat::EdgeList) {
        std::ostringstream out;
        out << doc.n << " " << doc.u << " " << doc.v << "\n";
        for (const auto& [a, b] : doc.edges) out << a << " " << b << "\n";
        return out.str();
    }
    json j;
    j["n"] = doc.n;
    j["u"] = doc.u;
    j["v"] = doc.v;
    j["edges"] = json::array();
    for (const auto& [a, b] : doc.edges) j["edges"].push_back({a, b});
    if (!doc.name.empty()) j["name"] = doc.name;
    if (doc.root) j["root"] = *doc.root;
    if (!doc.targets.empty()) {
        j["targets"] = json::array();
        for (const auto& t : doc.targets) {
            json entry = {t.s, t.t, nullptr};
            if (t.length) entry[2] = *t.length;
            j["targets"].push_back(entry);
        }
    }
    return j.dump(2) + "\n";
}

GraphDocument gen_gnp(int n, double p, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_gnp: n must be at least 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p must be in [0,1]");
    GraphDocument doc;
    doc.n = n;
    doc.u = 0;
    doc.v = n - 1;
    doc.name = "gnp-n" + std::to_string(n) + "-p" + format_double(p) + "-s" + std::to_string(seed);
    SplitMix64 rng(seed);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (rng.bernoulli(p)) doc.edges.emplace_back(a, b);
        }
    }
    return doc;
}

GraphDocument gen_layered(const std::vector<int>& widths, double p, uint64_t seed) {
    if (widths.empty() || widths.front() != 1 || widths.back() != 1) {
        throw std::invalid_argument("gen_layered: widths must start and end with 1");
    }
    for (int w : widths) {
        if (w < 1) throw std::invalid_argument("gen_layered: widths must be positive");
    }
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_layered: p must be in [0,1]");

    const int layer_count = static_cast<int>(widths.size());
    std::vector<std::vector<int>> layer(static_cast<size_t>(layer_count));
    int n = 0;
    for (int l = 0; l < layer_count; ++l) {
        for (int i = 0; i < widths[l]; ++i) layer[l].push_back(n++);
    }

    GraphDocument doc;
    doc.n = n;
    doc.u = 0;
    doc.v = n - 1;
    std::string wname;
    for (size_t i = 0; i < widths.size(); ++i) {
        wname += (i ? "x" : "") + std::to_string(widths[i]);
    }
    doc.name = "layered-w" + wname + "-p" + format_double(p) + "-s" + std::to_string(seed);

    SplitMix64 rng(seed);
    std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(n), 0));
    auto add = [&](int a, int b) {
        if (!adj[a][b]) {
            adj[a][b] = adj[b][a] = 1;
            doc.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    };
    for (int l = 0; l + 1 < layer_count; ++l) {
        for (int a : layer[l]) {
            for (int b : layer[l + 1]) {
                if (rng.bernoulli(p)) add(a, b);
            }
        }
    }
    // repair: every middle vertex needs a neighbour on both sides
    for (int l = 1; l + 1 < layer_count; ++l) {
        for (int x : layer[l]) {
            for (int side : {l - 1, l + 1}) {
                bool ok = false;
                for (int y : layer[side]) ok = ok || adj[x][y];
                if (!ok) add(x, layer[side].front());
            }
        }
    }
    std::sort(doc.edges.begin(), doc.edges.end());
    return doc;
}

namespace {

void append_time(std::string& out, std::optional<long> ms) {
    if (ms) out += "TIME " + std::to_string(*ms) + "\n";
}

std::string cert_line(const Path& p) {
    std::string out = "CERT";
    for (int x : p) out += " " + std::to_string(x);
    return out + "\n";
}

}  // namespace

std::string format_report_nsp(int dist, const NspOutcome& outcome, std::optional<long> ms) {
    std::string out = outcome.has_nsp() ? "VERDICT yes\n" : "VERDICT no\n";
    out += "DIST " + std::to_string(dist) + "\n";
    if (outcome.has_nsp()) out += cert_line(*outcome.certificate);
    append_time(out, ms);
    return out;
}

std::string format_report_exact(int dist, const std::optional<Path>& path,
                                std::optional<long> ms) {
    std::string out = path ? "VERDICT yes\n" : "VERDICT no\n";
    out += "DIST " + std::to_string(dist) + "\n";
    if (path) out += cert_line(*path);
    append_time(out, ms);
    return out;
}

std::string format_report_forest(const std::optional<PathForest>& forest,
                                 std::optional<long> ms) {
    std::string out = forest ? "VERDICT yes\n" : "VERDICT no\n";
    if (forest) {
        for (const auto& comp : forest->components) out += cert_line(comp.sequence);
    }
    append_time(out, ms);
    return out;
}

std::string format_report_oracle(int dist, bool has_nsp, const std::vector<int>& lengths,
                                 std::optional<long> ms) {
    std::string out = has_nsp ? "VERDICT yes\n" : "VERDICT no\n";
    out += "DIST " + std::to_string(dist) + "\n";
    out += "LENGTHS";
    for (int l : lengths) out += " " + std::to_string(l);
    out += "\n";
    append_time(out, ms);
    return out;
}

std::string format_report_straighten(const StraightenResult& result, int dist,
                                     std::optional<long> ms) {
    std::string out;
    if (const auto* path = std::get_if<Path>(&result)) {
        out = "VERDICT yes\nDIST " + std::to_string(dist) + "\n";
        out += cert_line(*path);
    } else {
        const auto& red = std::get<Reduction>(result);
        out = "VERDICT no\nDIST " + std::to_string(dist) + "\n";
        GraphDocument doc;
        doc.n = red.final_graph.vertex_count();
        doc.u = red.final_u;
        doc.v = red.final_v;
        doc.edges = red.final_graph.edges();
        json j = json::parse(serialize(doc, DocFormat::Structured));
        out += "REDUCED " + j.dump() + "\n";
        std::string map_line = "MAP";
        for (int o : red.final_to_original) map_line += " " + std::to_string(o);
        out += map_line + "\n";
        for (const auto& rec : red.records) {
            json r;
            r["component"] = rec.component;
            r["boundary"] = rec.boundary;
            r["added_edges"] = json::array();
            for (const auto& [a, b] : rec.added_edges) r["added_edges"].push_back({a, b});
            r["boundary_subgraph"] = json::array();
            for (const auto& [a, b] : rec.boundary_subgraph) {
                r["boundary_subgraph"].push_back({a, b});
            }
            out += "RECORD " + r.dump() + "\n";
        }
    }
    append_time(out, ms);
    return out;
}

}  // namespace nsp
