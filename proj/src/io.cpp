#include "dessinlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace dessinlab {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
};

} // namespace

Permutation parse_permutation(const std::string& text, int domain_size) {
    std::vector<int> images(domain_size);
    for (int k = 0; k < domain_size; ++k) images[k] = k;
    std::vector<char> seen(domain_size, 0);

    Cursor cur{text};
    cur.skip_ws();
    while (!cur.done()) {
        if (cur.peek() != '(')
            throw parse_error("expected '('", cur.line, cur.column);
        cur.advance();
        std::vector<int> cycle;
        for (;;) {
            cur.skip_ws();
            if (cur.done())
                throw parse_error("unbalanced parenthesis", cur.line, cur.column);
            if (cur.peek() == ')') {
                cur.advance();
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
                throw parse_error("expected integer or ')'", cur.line, cur.column);
            const int at_line = cur.line, at_col = cur.column;
            long v = 0;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                v = v * 10 + (cur.peek() - '0');
                if (v > domain_size)
                    throw parse_error("point " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(domain_size), at_line, at_col);
                cur.advance();
            }
            if (v < 1)
                throw parse_error("point " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(domain_size), at_line, at_col);
            if (seen[v - 1])
                throw parse_error("duplicate point " + std::to_string(v), at_line, at_col);
            seen[v - 1] = 1;
            cycle.push_back(static_cast<int>(v));
        }
        if (cycle.empty())
            throw parse_error("empty cycle", cur.line, cur.column);
        const int k = static_cast<int>(cycle.size());
        for (int t = 0; t < k; ++t)
            images[cycle[t] - 1] = cycle[(t + 1) % k] - 1;
        cur.skip_ws();
    }
    return Permutation::from_images(std::move(images));
}

std::string format_permutation(const Permutation& p, bool include_fixed) {
    std::string out;
    for (const auto& cyc : cycles(p)) {
        if (cyc.size() == 1 && !include_fixed) continue;
        out += '(';
        for (size_t t = 0; t < cyc.size(); ++t) {
            if (t) out += ' ';
            out += std::to_string(cyc[t]);
        }
        out += ')';
    }
    return out;
}

Permutation DessinDocument::sigma() const { return parse_permutation(sigma_text, 2 * n); }

Permutation DessinDocument::alpha() const {
    if (alpha_text) return parse_permutation(*alpha_text, 2 * n);
    return standard_pairing(n);
}

CleanDessin DessinDocument::to_dessin() const { return CleanDessin::make(sigma(), alpha()); }

DessinDocument parse_document(const std::string& text) {
    DessinDocument doc;
    bool have_n = false, have_sigma = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value'", line_no, static_cast<int>(first) + 1);
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        std::string value = line.substr(colon + 1);
        const auto vb = value.find_first_not_of(" \t\r");
        const auto ve = value.find_last_not_of(" \t\r");
        value = vb == std::string::npos ? "" : value.substr(vb, ve - vb + 1);

        if (key == "n") {
            try {
                doc.n = std::stoi(value);
            } catch (const std::exception&) {
                throw parse_error("invalid edge count '" + value + "'", line_no,
                                  static_cast<int>(colon) + 2);
            }
            if (doc.n < 1)
                throw parse_error("edge count must be positive", line_no,
                                  static_cast<int>(colon) + 2);
            have_n = true;
        } else if (key == "sigma") {
            doc.sigma_text = value;
            have_sigma = true;
        } else if (key == "alpha") {
            doc.alpha_text = value;
        } else if (key == "name") {
            doc.name = value;
        } else {
            throw parse_error("unknown key '" + key + "'", line_no,
                              static_cast<int>(first) + 1);
        }
    }
    if (!have_n) throw parse_error("missing required key 'n'", line_no, 1);
    if (!have_sigma) throw parse_error("missing required key 'sigma'", line_no, 1);
    return doc;
}

std::string format_document(const CleanDessin& d, const std::optional<std::string>& name) {
    std::string out;
    if (name) out += "name: " + *name + "\n";
    out += "n: " + std::to_string(d.edge_count()) + "\n";
    out += "sigma: " + format_permutation(d.sigma()) + "\n";
    out += "alpha: " + format_permutation(d.alpha()) + "\n";
    return out;
}

namespace {

nlohmann::ordered_json report_to_json(const InvariantReport& r, const std::string& digest) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["passport"] = {{"black_degrees", r.passport.black_degrees},
                     {"face_degrees", r.passport.face_degrees},
                     {"edge_count", r.passport.edge_count},
                     {"genus", r.passport.genus}};
    j["dim_lambda"] = r.dim_lambda;
    j["dim_center"] = r.dim_center;
    if (r.dim_hh1) {
        j["dim_hh1"] = *r.dim_hh1;
    } else {
        j["dim_hh1"] = nullptr;
        j["dim_hh1_reason"] = r.dim_hh1_reason;
    }
    j["tube_ranks"] = r.tube_ranks;
    j["loop_arrows"] = r.loop_arrows;
    j["canonical_digest"] = digest;
    if (r.oracles) {
        nlohmann::ordered_json o;
        o["dim_lambda"] = r.oracles->dim_lambda;
        o["dim_center"] = r.oracles->dim_center;
        if (r.oracles->dim_hh1)
            o["dim_hh1"] = *r.oracles->dim_hh1;
        else
            o["dim_hh1"] = nullptr;
        o["tube_ranks"] = r.oracles->tube_ranks;
        j["oracles"] = std::move(o);
    }
    return j;
}

} // namespace

std::string report_json(const InvariantReport& r, const std::string& digest) {
    return report_to_json(r, digest).dump(2) + "\n";
}

std::string report_text(const InvariantReport& r, const std::string& digest) {
    std::ostringstream out;
    const auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    out << "n: " << r.n << "\n";
    out << "black degrees: " << list(r.passport.black_degrees) << "\n";
    out << "face degrees: " << list(r.passport.face_degrees) << "\n";
    out << "genus: " << r.passport.genus << "\n";
    out << "dim Lambda: " << r.dim_lambda << "\n";
    out << "dim Z: " << r.dim_center << "\n";
    if (r.dim_hh1)
        out << "dim HH1: " << *r.dim_hh1 << "\n";
    else
        out << "dim HH1: n/a (" << r.dim_hh1_reason << ")\n";
    out << "tube ranks: " << list(r.tube_ranks) << "\n";
    out << "loop arrows: " << r.loop_arrows << "\n";
    out << "canonical digest: " << digest << "\n";
    if (r.oracles) {
        out << "oracles: dim Lambda " << r.oracles->dim_lambda << ", dim Z "
            << r.oracles->dim_center << ", dim HH1 ";
        if (r.oracles->dim_hh1)
            out << *r.oracles->dim_hh1;
        else
            out << "n/a";
        out << ", tube ranks " << list(r.oracles->tube_ranks) << "\n";
    }
    return out.str();
}

std::string export_dot(const CleanDessin& d) {
    std::ostringstream out;
    out << "graph dessin {\n";
    out << "  node [shape=circle];\n";
    const auto vertex_cycles = cycles(d.sigma());
    std::vector<int> black_of(d.dart_count() + 1, 0);
    for (int c = 0; c < static_cast<int>(vertex_cycles.size()); ++c) {
        out << "  b" << c << " [style=filled fillcolor=black label=\"\"];\n";
        for (int dart : vertex_cycles[c]) black_of[dart] = c;
    }
    for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) {
        const auto& [lo, hi] = d.edges()[e];
        out << "  w" << e << " [label=\"(" << lo << " " << hi << ")\"];\n";
    }
    // One edge per dart; `pos` is the dart's position in the rotation at its
    // black vertex, since the embedding carries the orientation data.
    std::vector<std::pair<int, int>> rotation(d.dart_count() + 1);
    for (int c = 0; c < static_cast<int>(vertex_cycles.size()); ++c)
        for (int p = 0; p < static_cast<int>(vertex_cycles[c].size()); ++p)
            rotation[vertex_cycles[c][p]] = {c, p};
    for (int dart = 1; dart <= d.dart_count(); ++dart) {
        out << "  b" << rotation[dart].first << " -- w" << d.edge_of_dart(dart)
            << " [label=\"" << dart << "\" rot=\"" << rotation[dart].second << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const Quiver& q) {
    static const char* palette[] = {"red",    "blue",   "darkgreen", "orange",
                                    "purple", "brown",  "magenta",   "cyan4"};
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto& [lo, hi] = q.vertex_edge(v);
        out << "  v" << v << " [label=\"(" << lo << " " << hi << ")\"];\n";
    }
    for (const auto& a : q.arrows()) {
        out << "  v" << a.source << " -> v" << a.target << " [color="
            << palette[a.cycle % 8] << " label=\"a" << a.id << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace dessinlab
