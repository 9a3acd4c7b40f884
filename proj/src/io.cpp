#include "amalgam/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace amalgam {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

// comment-stripped, tokenized, nonempty lines
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            std::size_t stop = pos;
            while (stop < raw.size() && !std::isspace(static_cast<unsigned char>(raw[stop])))
                ++stop;
            if (stop > pos) line.tokens.emplace_back(raw.substr(pos, stop - pos));
            pos = stop;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(line.number, std::string("bad ") + what + " token '" + token + "'");
    return value;
}

int parse_keyed(const Line& line, const std::string& token, std::string_view key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        fail(line.number, "expected " + std::string(key) + "=<int>, got '" + token + "'");
    return parse_int(line, token.substr(key.size() + 1), std::string(key).c_str());
}

}  // namespace

BoundedMetricSpace BmsDocument::require_space() const {
    if (!total())
        throw InputError("file is a partial spec (" +
                         std::to_string(pair_count(spec.point_count()) - spec.assigned_count()) +
                         " unassigned pairs); a total space is required here");
    DistanceCandidate candidate;
    candidate.bound = spec.bound();
    candidate.points = spec.points();
    candidate.values.reserve(pair_count(spec.point_count()));
    for (std::size_t i = 0; i < spec.point_count(); ++i)
        for (std::size_t j = i + 1; j < spec.point_count(); ++j)
            candidate.values.push_back(spec.value(i, j));
    auto made = BoundedMetricSpace::make(std::move(candidate));
    if (auto* report = std::get_if<ValidationReport>(&made))
        throw InputError("not a metric: " + report->describe());
    return std::get<BoundedMetricSpace>(std::move(made));
}

BmsDocument parse_bms(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw InputError("empty input");
    const Line& header = lines[0];
    if (header.tokens[0] != "bms") fail(header.number, "expected header 'bms n=<int> nstar=<int>'");
    if (header.tokens.size() < 2 || header.tokens.size() > 3)
        fail(header.number, "header takes n=<int> and optional nstar=<int>");
    const int bound = parse_keyed(header, header.tokens[1], "n");
    if (bound < 1) fail(header.number, "n must be positive");
    int nstar = default_nstar(bound);
    if (header.tokens.size() == 3) nstar = parse_keyed(header, header.tokens[2], "nstar");
    if (nstar < default_nstar(bound) || nstar > bound)
        fail(header.number, "nstar outside [ceil(n/2), n]");

    if (lines.size() < 2) throw InputError("missing points line");
    std::vector<PointId> points = lines[1].tokens;
    {
        std::vector<PointId> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i - 1] == sorted[i])
                fail(lines[1].number, "duplicate point name '" + sorted[i] + "'");
    }

    std::vector<PartialDistanceSpec::Assignment> assigned;
    std::set<std::pair<PointId, PointId>> seen;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 3) fail(line.number, "expected '<p> <q> <d>'");
        const PointId& p = line.tokens[0];
        const PointId& q = line.tokens[1];
        for (const PointId& id : {p, q})
            if (std::find(points.begin(), points.end(), id) == points.end())
                fail(line.number, "unknown point '" + id + "'");
        if (p == q) fail(line.number, "pair must join distinct points");
        if (!seen.insert({std::min(p, q), std::max(p, q)}).second)
            fail(line.number, "pair (" + p + "," + q + ") assigned twice");
        const int d = parse_int(line, line.tokens[2], "distance");
        if (d < 1 || d > bound)
            fail(line.number, "distance " + std::to_string(d) + " outside {1.." +
                                  std::to_string(bound) + "}");
        assigned.push_back({p, q, d});
    }
    BmsDocument doc;
    doc.bound = bound;
    doc.nstar = nstar;
    doc.spec = PartialDistanceSpec::make(bound, std::move(points), assigned);
    return doc;
}

namespace {

std::string bms_header(int bound, int nstar) {
    if (nstar == 0) nstar = default_nstar(bound);
    return "bms n=" + std::to_string(bound) + " nstar=" + std::to_string(nstar) + "\n";
}

std::string points_line(const std::vector<PointId>& points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += " ";
        out += points[i];
    }
    out += "\n";
    return out;
}

}  // namespace

std::string serialize_bms(const BoundedMetricSpace& space, int nstar) {
    std::string out = bms_header(space.bound(), nstar) + points_line(space.points());
    for (std::size_t i = 0; i < space.point_count(); ++i)
        for (std::size_t j = i + 1; j < space.point_count(); ++j)
            out += space.point(i) + " " + space.point(j) + " " + std::to_string(space.dist(i, j)) +
                   "\n";
    return out;
}

std::string serialize_bms(const PartialDistanceSpec& spec, int nstar) {
    std::string out = bms_header(spec.bound(), nstar) + points_line(spec.points());
    for (const auto& a : spec.assignments())
        out += a.p + " " + a.q + " " + std::to_string(a.value) + "\n";
    return out;
}

std::string canonicalize_bms(std::string_view text) {
    const BmsDocument doc = parse_bms(text);
    return serialize_bms(doc.spec, doc.nstar);
}

DirectedDistanceStructure parse_dds(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw InputError("empty input");
    const Line& header = lines[0];
    if (header.tokens[0] != "dds" || header.tokens.size() != 2)
        fail(header.number, "expected header 'dds n=<int>'");
    const int bound = parse_keyed(header, header.tokens[1], "n");
    if (bound < 1) fail(header.number, "n must be positive");
    if (lines.size() < 2) throw InputError("missing points line");
    std::vector<PointId> points = lines[1].tokens;

    std::vector<DirectedEdgeSpec> specs;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 3 && line.tokens.size() != 4)
            fail(line.number, "expected '<p> <q> <d>' or '<p> <q> <d> bi'");
        DirectedEdgeSpec spec;
        spec.from = line.tokens[0];
        spec.to = line.tokens[1];
        spec.length = parse_int(line, line.tokens[2], "distance");
        if (line.tokens.size() == 4) {
            if (line.tokens[3] != "bi") fail(line.number, "trailing token must be 'bi'");
            spec.bidirected = true;
        }
        specs.push_back(std::move(spec));
    }
    return DirectedDistanceStructure::make(bound, std::move(points), specs);
}

std::string serialize_dds(const DirectedDistanceStructure& s) {
    std::string out = "dds n=" + std::to_string(s.bound()) + "\n" + points_line(s.points());
    for (const auto& spec : s.pair_specs()) {
        out += spec.from + " " + spec.to + " " + std::to_string(spec.length);
        if (spec.bidirected) out += " bi";
        out += "\n";
    }
    return out;
}

EdgeRelationGraph parse_edge_list(std::string_view text) {
    const auto lines = tokenize(text);
    std::vector<PointId> vertices;
    std::vector<std::pair<PointId, PointId>> edges;
    for (const Line& line : lines) {
        if (line.tokens.size() != 2) fail(line.number, "expected '<u> <v>'");
        vertices.push_back(line.tokens[0]);
        vertices.push_back(line.tokens[1]);
        edges.push_back({line.tokens[0], line.tokens[1]});
    }
    return EdgeRelationGraph::make(std::move(vertices), edges);
}

std::string serialize_edge_list(const std::vector<PointId>& vertices,
                                const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<PointId, PointId>> named;
    named.reserve(edges.size());
    for (const auto& [u, v] : edges)
        named.push_back({vertices[static_cast<std::size_t>(u)],
                         vertices[static_cast<std::size_t>(v)]});
    std::sort(named.begin(), named.end());
    std::string out;
    for (const auto& [u, v] : named) out += u + " " + v + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << contents;
}

}  // namespace amalgam
