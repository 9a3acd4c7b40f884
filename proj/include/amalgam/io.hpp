#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amalgam/digraph_distance.hpp"
#include "amalgam/metric_space.hpp"
#include "amalgam/relation_graph.hpp"

namespace amalgam {

// Parsed ".bms" file: header `bms n=<int> nstar=<int>`, a line of point
// names, then `<p> <q> <d>` lines. A file listing every pair is a total
// space; anything else is a partial spec. '#' starts a comment.
struct BmsDocument {
    int bound = 0;
    int nstar = 0;
    PartialDistanceSpec spec;

    bool total() const { return spec.is_total(); }
    // Throws InputError when the document is not total or not a metric.
    BoundedMetricSpace require_space() const;
};

BmsDocument parse_bms(std::string_view text);
std::string serialize_bms(const BoundedMetricSpace& space, int nstar = 0);
std::string serialize_bms(const PartialDistanceSpec& spec, int nstar = 0);
std::string canonicalize_bms(std::string_view text);

// ".dds": header `dds n=<int>`, points line, `<p> <q> <d>` (directed p->q)
// or `<p> <q> <d> bi` lines.
DirectedDistanceStructure parse_dds(std::string_view text);
std::string serialize_dds(const DirectedDistanceStructure& s);

// Plain edge lists, one `<u> <v>` per line.
EdgeRelationGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const std::vector<PointId>& vertices,
                                const std::vector<std::pair<int, int>>& edges);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace amalgam
