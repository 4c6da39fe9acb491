#include "lpiso/io.hpp"

#include <fstream>
#include <sstream>

namespace lpiso {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

Rational parse_rational_or_fail(const std::string& text, const std::string& context) {
    auto q = parse_rational(text);
    if (!q) raise(ErrorCode::BadInput, "bad rational '" + text + "' in " + context);
    return *q;
}

Dyadic parse_dyadic_or_fail(const std::string& text, const std::string& context) {
    Rational q = parse_rational_or_fail(text, context);
    if (!Dyadic::is_dyadic(q)) raise(ErrorCode::BadInput, "breakpoint not dyadic in " + context);
    return Dyadic::from_rational_exact(q);
}

std::uint32_t parse_u32(const std::string& text, const std::string& context) {
    try {
        unsigned long v = std::stoul(text);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        raise(ErrorCode::BadInput, "bad integer '" + text + "' in " + context);
    }
}

} // namespace

std::string vector_literal(const LpVector& v) { return v.to_literal(); }

namespace {

SeqVector parse_atomic_literal(const std::string& body) {
    SeqVector atoms;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t colon = body.find(':', pos);
        if (colon == std::string::npos) raise(ErrorCode::BadInput, "atomic literal expects i:q");
        std::size_t comma = body.find(',', colon);
        if (comma == std::string::npos) comma = body.size();
        std::uint32_t idx = parse_u32(body.substr(pos, colon - pos), "atomic literal");
        Rational c = parse_rational_or_fail(body.substr(colon + 1, comma - colon - 1), "atomic literal");
        atoms = atoms.with(idx, c);
        pos = comma + 1;
    }
    return atoms;
}

StepFunction parse_step_literal(const std::string& body) {
    auto toks = tokens_of(body);
    if (toks.size() < 3 || toks.size() % 2 == 0)
        raise(ErrorCode::BadInput, "step literal expects t0 q0 ... 1");
    std::vector<Dyadic> bps;
    std::vector<Rational> vals;
    for (std::size_t i = 0; i + 1 < toks.size(); i += 2) {
        bps.push_back(parse_dyadic_or_fail(toks[i], "step literal"));
        vals.push_back(parse_rational_or_fail(toks[i + 1], "step literal"));
    }
    bps.push_back(parse_dyadic_or_fail(toks.back(), "step literal"));
    return StepFunction(std::move(bps), std::move(vals));
}

} // namespace

LpVector parse_vector_literal(const std::string& text, SpaceTag tag, const Exponent& p,
                              std::optional<std::uint32_t> dim) {
    std::string s = text;
    // Strip the pair parentheses of sum-space literals.
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) raise(ErrorCode::BadInput, "empty vector literal");
    auto last = s.find_last_not_of(" \t");
    s = s.substr(first, last - first + 1);
    if (s.front() == '(') {
        if (s.back() != ')') raise(ErrorCode::BadInput, "unbalanced pair literal");
        s = s.substr(1, s.size() - 2);
    }
    SeqVector atoms;
    StepFunction cont;
    std::size_t pos = 0;
    while (pos < s.size()) {
        char c = s[pos];
        if (c == '[') {
            std::size_t close = s.find(']', pos);
            if (close == std::string::npos) raise(ErrorCode::BadInput, "unterminated atomic literal");
            atoms = parse_atomic_literal(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else if (c == '{') {
            std::size_t close = s.find('}', pos);
            if (close == std::string::npos) raise(ErrorCode::BadInput, "unterminated step literal");
            cont = parse_step_literal(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else if (c == ',' || c == ' ' || c == '\t') {
            ++pos;
        } else {
            raise(ErrorCode::BadInput, std::string("unexpected character '") + c + "' in vector literal");
        }
    }
    return LpVector(tag, p, std::move(atoms), std::move(cont), dim);
}

std::string presentation_to_text(const Presentation& pres) {
    std::ostringstream out;
    out << "lpiso-presentation v1\n";
    out << "signature " << pres.signature().name() << "\n";
    if (pres.kind() == Presentation::Kind::FiniteMetric) {
        const auto& table = pres.distance_table();
        out << "kind finite_metric\n";
        out << "points " << table.size() << "\n";
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = i + 1; j < table.size(); ++j)
                out << "d " << i << " " << j << " " << to_string(table[i][j]) << "\n";
        return out.str();
    }
    out << "kind " << space_tag_name(pres.tag()) << "\n";
    out << "p " << to_string(pres.exponent().value()) << "\n";
    if (pres.dimension()) out << "n " << *pres.dimension() << "\n";
    if (pres.scramble() && !pres.scramble()->is_identity()) {
        const Scramble& s = *pres.scramble();
        if (!s.perm.empty()) {
            out << "scramble-perm";
            for (auto v : s.perm) out << " " << v;
            out << "\nscramble-signs";
            for (auto v : s.signs) out << " " << v;
            out << "\n";
        }
        if (!s.piece_perm.empty()) {
            out << "scramble-piece-level " << s.piece_level << "\n";
            out << "scramble-piece-perm";
            for (auto v : s.piece_perm) out << " " << v;
            out << "\nscramble-piece-signs";
            for (auto v : s.piece_signs) out << " " << v;
            out << "\n";
        }
    }
    return out.str();
}

Presentation presentation_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || tokens_of(line) != std::vector<std::string>{"lpiso-presentation", "v1"})
        raise(ErrorCode::BadInput, "missing presentation header");

    std::optional<SpaceTag> tag;
    bool finite = false;
    std::optional<Rational> p;
    std::optional<std::uint32_t> dim;
    Scramble scr = Scramble::identity();
    bool scrambled = false;
    std::size_t points = 0;
    std::vector<std::vector<Rational>> table;

    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto rest = std::vector<std::string>(toks.begin() + 1, toks.end());
        if (key == "signature") {
            if (rest.size() != 1 || (rest[0] != "banach" && rest[0] != "metric"))
                raise(ErrorCode::BadInput, "signature must be banach or metric");
        } else if (key == "kind") {
            if (rest.size() != 1) raise(ErrorCode::BadInput, "kind needs one value");
            if (rest[0] == "finite_metric") {
                finite = true;
            } else {
                tag = parse_space_tag(rest[0]);
                if (!tag) raise(ErrorCode::BadInput, "unknown kind " + rest[0]);
            }
        } else if (key == "p") {
            p = parse_rational_or_fail(rest.at(0), "p");
        } else if (key == "n") {
            dim = parse_u32(rest.at(0), "n");
        } else if (key == "points") {
            points = parse_u32(rest.at(0), "points");
            table.assign(points, std::vector<Rational>(points, Rational(0)));
        } else if (key == "d") {
            if (table.empty()) raise(ErrorCode::BadInput, "d before points");
            std::uint32_t i = parse_u32(rest.at(0), "d"), j = parse_u32(rest.at(1), "d");
            if (i >= points || j >= points) raise(ErrorCode::BadInput, "d index out of range");
            Rational v = parse_rational_or_fail(rest.at(2), "d");
            table[i][j] = table[j][i] = v;
        } else if (key == "scramble-perm") {
            for (const auto& t : rest) scr.perm.push_back(parse_u32(t, key));
            scrambled = true;
        } else if (key == "scramble-signs") {
            for (const auto& t : rest) scr.signs.push_back(t == "-1" ? -1 : 1);
        } else if (key == "scramble-piece-level") {
            scr.piece_level = parse_u32(rest.at(0), key);
            scrambled = true;
        } else if (key == "scramble-piece-perm") {
            for (const auto& t : rest) scr.piece_perm.push_back(parse_u32(t, key));
        } else if (key == "scramble-piece-signs") {
            for (const auto& t : rest) scr.piece_signs.push_back(t == "-1" ? -1 : 1);
        } else {
            raise(ErrorCode::BadInput, "unknown presentation key " + key);
        }
    }

    if (finite) return Presentation::finite_metric(std::move(table));
    if (!tag || !p) raise(ErrorCode::BadInput, "presentation needs kind and p");
    if (scrambled) return Presentation::scrambled(*tag, Exponent(*p), dim, scr);
    return Presentation::standard(*tag, Exponent(*p), dim);
}

Presentation load_presentation(const std::string& path) {
    return presentation_from_text(read_file(path));
}

void save_presentation(const Presentation& pres, const std::string& path) {
    write_file(path, presentation_to_text(pres));
}

std::string table_to_text(const IsometryTable& table) {
    std::ostringstream out;
    for (const auto& [key, v] : table.f_entries())
        out << "f " << key.first.str() << " " << key.second << " " << v.str() << "\n";
    for (const auto& [key, v] : table.g_entries())
        out << "g " << key.first.str() << " " << key.second << " " << v.str() << "\n";
    return out.str();
}

IsometryTable table_from_text(const std::string& text) {
    IsometryTable table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 4 || (toks[0] != "f" && toks[0] != "g"))
            raise(ErrorCode::BadInput, "table lines are 'f|g m n v'");
        try {
            PointIndex m(toks[1]);
            std::int64_t n = std::stoll(toks[2]);
            PointIndex v(toks[3]);
            if (m < 0 || n < 0 || v < 0) raise(ErrorCode::BadInput, "negative table entry: " + line);
            if (toks[0] == "f") table.set_f(m, n, v); else table.set_g(m, n, v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            raise(ErrorCode::BadInput, "bad table line: " + line);
        }
    }
    return table;
}

IsometryTable load_table(const std::string& path) { return table_from_text(read_file(path)); }

std::string map_to_text(const std::vector<PointIndex>& map) {
    std::ostringstream out;
    for (std::size_t m = 0; m < map.size(); ++m) out << m << " " << map[m].str() << "\n";
    return out.str();
}

std::vector<PointIndex> map_from_text(const std::string& text) {
    std::map<std::size_t, PointIndex> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) raise(ErrorCode::BadInput, "map lines are 'm v'");
        try {
            PointIndex v(toks[1]);
            if (v < 0) raise(ErrorCode::BadInput, "negative map value: " + line);
            entries[std::stoull(toks[0])] = v;
        } catch (const std::exception&) {
            raise(ErrorCode::BadInput, "bad map line: " + line);
        }
    }
    std::vector<PointIndex> map;
    for (const auto& [m, v] : entries) {
        if (m != map.size()) raise(ErrorCode::BadInput, "map must cover 0..N-1 without gaps");
        map.push_back(v);
    }
    return map;
}

std::vector<PointIndex> load_map(const std::string& path) { return map_from_text(read_file(path)); }

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!g) {
            if (toks.size() != 1) raise(ErrorCode::BadInput, "graph header is the vertex count");
            g = Graph(parse_u32(toks[0], "vertex count"));
            continue;
        }
        if (toks.size() != 2) raise(ErrorCode::BadInput, "graph edges are 'u v'");
        g->add_edge(parse_u32(toks[0], "edge"), parse_u32(toks[1], "edge"));
    }
    if (!g) raise(ErrorCode::BadInput, "empty graph file");
    return *g;
}

Graph load_graph(const std::string& path) { return graph_from_text(read_file(path)); }

std::string tree_dump(const VectorTree& tree, const ChainPartition* partition) {
    std::ostringstream out;
    for (const auto& addr : tree.bfs_order()) {
        out << address_to_string(addr) << " ; " << vector_literal(tree.label(addr)) << " ; ";
        if (partition) out << partition->assignment.at(addr);
        else out << "-";
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::BadInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::BadInput, "cannot write " + path);
    out << content;
}

} // namespace lpiso
