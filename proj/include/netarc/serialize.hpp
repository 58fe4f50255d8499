#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netarc/constructions.hpp"
#include "netarc/search.hpp"
#include "netarc/suite.hpp"

namespace netarc {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);
ArcKind parse_kind(const std::string& name);  // "oval" or "hyperoval"

// Slopes travel as integer codes with the literal token "inf" for the
// vertical class; points as "cx,cy" code pairs.
std::string slope_token(const Slope& s);
Slope parse_slope(const FieldPtr& f, const std::string& token);
std::vector<Slope> parse_slope_list(const FieldPtr& f, const std::string& csv);
std::string point_token(const Point& p);
Point parse_point(const FieldPtr& f, const std::string& token);

// Points file: the field descriptor on the first line, then one "cx,cy" per
// line. Blank lines and '#' comments are skipped on input.
std::string points_file_text(const PointSet& s);
std::pair<FieldPtr, PointSet> parse_points_file(const std::string& text);
std::pair<FieldPtr, PointSet> load_points_file(const std::string& path);

std::string format_construction(const Construction& c, OutputFormat fmt);

std::string format_arc_report(const NetSpec& net, const PointSet& s,
                              const ArcReport& rep, OutputFormat fmt);

std::string format_search(const SearchTask& task, const SearchResult& res,
                          OutputFormat fmt, bool timing);

struct TableCell {
    uint64_t q;
    uint32_t r;
    ArcKind kind;
    SearchStatus status;
    uint64_t nodes;
    uint64_t millis;
};

std::string format_table(ArcKind kind, const std::vector<TableCell>& cells,
                         OutputFormat fmt, bool timing);

std::string format_equivalence(const FieldPtr& f,
                               const std::optional<Collineation>& map,
                               OutputFormat fmt);

std::string format_acceptance(const std::vector<CriterionResult>& rows,
                              OutputFormat fmt);

std::string format_error(const std::string& message, OutputFormat fmt);

}  // namespace netarc
