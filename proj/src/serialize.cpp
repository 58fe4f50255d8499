#include "netarc/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netarc {

namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(cells[i]);
    }
    out += '\n';
    return out;
}

std::string join_slopes(const std::vector<Slope>& slopes) {
    std::string out;
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (i) out += ' ';
        out += slope_token(slopes[i]);
    }
    return out;
}

std::string join_points(const PointSet& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += point_token(s[i]);
    }
    return out;
}

std::string join_points(const std::vector<Point>& pts) {
    std::string out;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += point_token(pts[i]);
    }
    return out;
}

std::string pretty_points(const PointSet& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i].str();
    }
    return out;
}

ojson slope_array(const std::vector<Slope>& slopes) {
    ojson arr = ojson::array();
    for (const Slope& s : slopes) arr.push_back(slope_token(s));
    return arr;
}

ojson point_array(const PointSet& s) {
    ojson arr = ojson::array();
    for (const Point& p : s) arr.push_back(point_token(p));
    return arr;
}

std::string mode_name(SearchMode m) {
    return m == SearchMode::decide ? "decide" : "enumerate-orbits";
}

uint64_t parse_code(const std::string& tok, uint64_t limit, const char* what) {
    size_t pos = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
    }
    if (pos != tok.size())
        throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
    if (v >= limit)
        throw std::invalid_argument(std::string(what) + ": code " + tok +
                                    " out of range");
    return v;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format '" + name +
                                "' (expected json, csv or text)");
}

ArcKind parse_kind(const std::string& name) {
    if (name == "oval") return ArcKind::oval;
    if (name == "hyperoval") return ArcKind::hyperoval;
    throw std::invalid_argument("unknown kind '" + name +
                                "' (expected oval or hyperoval)");
}

std::string slope_token(const Slope& s) { return s.str(); }

Slope parse_slope(const FieldPtr& f, const std::string& token) {
    if (token == "inf") return Slope::infinity(f);
    return Slope::finite(
        f->element(static_cast<uint32_t>(parse_code(token, f->q(), "slope"))));
}

std::vector<Slope> parse_slope_list(const FieldPtr& f, const std::string& csv) {
    std::vector<Slope> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("slope list: empty entry in '" + csv + "'");
        out.push_back(parse_slope(f, tok));
    }
    if (out.empty()) throw std::invalid_argument("slope list: no entries");
    return out;
}

std::string point_token(const Point& p) {
    return std::to_string(p.x.code()) + "," + std::to_string(p.y.code());
}

Point parse_point(const FieldPtr& f, const std::string& token) {
    size_t comma = token.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point: expected 'cx,cy', got '" + token + "'");
    uint32_t cx = static_cast<uint32_t>(
        parse_code(token.substr(0, comma), f->q(), "point"));
    uint32_t cy = static_cast<uint32_t>(
        parse_code(token.substr(comma + 1), f->q(), "point"));
    return {f->element(cx), f->element(cy)};
}

std::string points_file_text(const PointSet& s) {
    if (!s.field()) throw std::invalid_argument("points file: empty set");
    std::string out = s.field()->descriptor() + "\n";
    for (const Point& p : s) out += point_token(p) + "\n";
    return out;
}

std::pair<FieldPtr, PointSet> parse_points_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    FieldPtr f;
    std::vector<Point> pts;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        size_t stop = line.find_last_not_of(" \t");
        std::string tok = line.substr(start, stop - start + 1);
        if (tok[0] == '#') continue;
        if (!f) {
            f = Field::parse(tok);
            continue;
        }
        pts.push_back(parse_point(f, tok));
    }
    if (!f) throw std::invalid_argument("points file: missing field descriptor");
    return {f, PointSet(std::move(pts))};
}

std::pair<FieldPtr, PointSet> load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_points_file(buf.str());
}

std::string format_construction(const Construction& c, OutputFormat fmt) {
    const FieldPtr& f = c.net.field();
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "construction";
            j["name"] = c.name;
            j["field"] = f->descriptor();
            ojson params = ojson::object();
            for (const auto& [k, v] : c.params) params[k] = v;
            j["params"] = params;
            j["kind"] = to_string(c.expected_kind);
            j["degree"] = c.net.r();
            j["slopes"] = slope_array(c.net.slopes());
            j["points"] = point_array(c.points);
            return dump(j);
        }
        case OutputFormat::csv: {
            std::string params;
            for (const auto& [k, v] : c.params) {
                if (!params.empty()) params += ' ';
                params += k + "=" + v;
            }
            return csv_row({"name", "field", "kind", "degree", "params", "slopes",
                            "points"}) +
                   csv_row({c.name, f->descriptor(), to_string(c.expected_kind),
                            std::to_string(c.net.r()), params,
                            join_slopes(c.net.slopes()), join_points(c.points)});
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << "construction: " << c.name << "\n";
            os << "field: " << f->descriptor() << "\n";
            if (!c.params.empty()) {
                os << "params:";
                for (const auto& [k, v] : c.params) os << ' ' << k << '=' << v;
                os << "\n";
            }
            os << "kind: " << to_string(c.expected_kind) << "\n";
            os << "degree: " << c.net.r() << "\n";
            os << "slopes: " << join_slopes(c.net.slopes()) << "\n";
            os << "points: " << pretty_points(c.points) << "\n";
            return os.str();
        }
    }
    throw std::logic_error("format_construction: bad format");
}

std::string format_arc_report(const NetSpec& net, const PointSet& s,
                              const ArcReport& rep, OutputFormat fmt) {
    const FieldPtr& f = net.field();
    std::string profile;
    for (const auto& [slope, count] : rep.secant_profile) {
        if (!profile.empty()) profile += ' ';
        profile += slope_token(slope) + ":" + std::to_string(count);
    }
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "arc_report";
            j["field"] = f->descriptor();
            j["slopes"] = slope_array(net.slopes());
            j["degree"] = net.r();
            j["size"] = s.size();
            j["kind"] = to_string(rep.kind);
            if (!rep.witness.empty()) {
                ojson arr = ojson::array();
                for (const Point& p : rep.witness) arr.push_back(point_token(p));
                j["witness"] = arr;
            }
            if (rep.missing_slope) j["missing_slope"] = slope_token(*rep.missing_slope);
            if (!rep.secant_profile.empty()) {
                ojson arr = ojson::array();
                for (const auto& [slope, count] : rep.secant_profile) {
                    ojson e;
                    e["slope"] = slope_token(slope);
                    e["secants"] = count;
                    arr.push_back(e);
                }
                j["secant_profile"] = arr;
            }
            return dump(j);
        }
        case OutputFormat::csv:
            return csv_row({"field", "degree", "size", "kind", "witness",
                            "missing_slope", "profile"}) +
                   csv_row({f->descriptor(), std::to_string(net.r()),
                            std::to_string(s.size()), to_string(rep.kind),
                            join_points(rep.witness),
                            rep.missing_slope ? slope_token(*rep.missing_slope) : "",
                            profile});
        case OutputFormat::text: {
            std::ostringstream os;
            os << "field: " << f->descriptor() << "\n";
            os << "slopes: " << join_slopes(net.slopes()) << "\n";
            os << "size: " << s.size() << "\n";
            os << "kind: " << to_string(rep.kind) << "\n";
            if (!rep.witness.empty()) {
                os << (rep.missing_slope ? "unjoined pair:" : "collinear triple:");
                for (const Point& p : rep.witness) os << ' ' << p.str();
                os << "\n";
            }
            if (rep.missing_slope)
                os << "missing slope: " << slope_token(*rep.missing_slope) << "\n";
            if (!profile.empty()) os << "secants: " << profile << "\n";
            return os.str();
        }
    }
    throw std::logic_error("format_arc_report: bad format");
}

std::string format_search(const SearchTask& task, const SearchResult& res,
                          OutputFormat fmt, bool timing) {
    const FieldPtr& f = task.field;
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "search";
            j["field"] = f->descriptor();
            j["r"] = task.r;
            j["kind"] = to_string(task.kind);
            j["mode"] = mode_name(task.mode);
            j["status"] = to_string(res.status);
            j["nodes"] = res.nodes;
            if (timing) j["millis"] = res.millis;
            if (res.witness) {
                ojson w;
                w["slopes"] = slope_array(res.witness->net.slopes());
                w["points"] = point_array(res.witness->points);
                j["witness"] = w;
            }
            if (res.orbit_count) j["orbits"] = *res.orbit_count;
            return dump(j);
        }
        case OutputFormat::csv: {
            std::vector<std::string> head = {"field",  "r",      "kind",
                                             "mode",   "status", "nodes",
                                             "orbits", "witness_slopes",
                                             "witness_points"};
            std::vector<std::string> row = {
                f->descriptor(),
                std::to_string(task.r),
                to_string(task.kind),
                mode_name(task.mode),
                to_string(res.status),
                std::to_string(res.nodes),
                res.orbit_count ? std::to_string(*res.orbit_count) : "",
                res.witness ? join_slopes(res.witness->net.slopes()) : "",
                res.witness ? join_points(res.witness->points) : ""};
            if (timing) {
                head.push_back("millis");
                row.push_back(std::to_string(res.millis));
            }
            return csv_row(head) + csv_row(row);
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << "search " << f->descriptor() << " r=" << task.r << " "
               << to_string(task.kind) << ": " << to_string(res.status) << "\n";
            os << "nodes: " << res.nodes << "\n";
            if (timing) os << "millis: " << res.millis << "\n";
            if (res.witness) {
                os << "slopes: " << join_slopes(res.witness->net.slopes()) << "\n";
                os << "points: " << pretty_points(res.witness->points) << "\n";
            }
            if (res.orbit_count) os << "orbits: " << *res.orbit_count << "\n";
            return os.str();
        }
    }
    throw std::logic_error("format_search: bad format");
}

std::string format_table(ArcKind kind, const std::vector<TableCell>& cells,
                         OutputFormat fmt, bool timing) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "table";
            j["kind"] = to_string(kind);
            ojson arr = ojson::array();
            for (const TableCell& c : cells) {
                ojson e;
                e["q"] = c.q;
                e["r"] = c.r;
                e["status"] = to_string(c.status);
                e["nodes"] = c.nodes;
                if (timing) e["millis"] = c.millis;
                arr.push_back(e);
            }
            j["cells"] = arr;
            ojson degrees = ojson::object();
            for (const TableCell& c : cells) {
                std::string key = std::to_string(c.q);
                if (!degrees.contains(key)) degrees[key] = ojson::array();
                if (c.status == SearchStatus::found) degrees[key].push_back(c.r);
            }
            j["degrees"] = degrees;
            return dump(j);
        }
        case OutputFormat::csv: {
            std::vector<std::string> head = {"q", "r", "kind", "status", "nodes"};
            if (timing) head.push_back("millis");
            std::string out = csv_row(head);
            for (const TableCell& c : cells) {
                std::vector<std::string> row = {
                    std::to_string(c.q), std::to_string(c.r), to_string(kind),
                    to_string(c.status), std::to_string(c.nodes)};
                if (timing) row.push_back(std::to_string(c.millis));
                out += csv_row(row);
            }
            return out;
        }
        case OutputFormat::text: {
            std::ostringstream os;
            char letter = kind == ArcKind::oval ? 'O' : 'H';
            uint64_t cur = 0;
            bool first = true;
            for (const TableCell& c : cells) {
                if (c.q != cur) {
                    if (cur) os << "}\n";
                    os << letter << '_' << c.q << " = {";
                    cur = c.q;
                    first = true;
                }
                if (c.status == SearchStatus::found) {
                    if (!first) os << ',';
                    os << c.r;
                    first = false;
                }
            }
            if (cur) os << "}\n";
            return os.str();
        }
    }
    throw std::logic_error("format_table: bad format");
}

std::string format_equivalence(const FieldPtr& f,
                               const std::optional<Collineation>& map,
                               OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "equivalence";
            j["field"] = f->descriptor();
            j["equivalent"] = map.has_value();
            if (map) {
                ojson m;
                m["a"] = map->a().code();
                m["b"] = map->b().code();
                m["c"] = map->c().code();
                m["d"] = map->d().code();
                m["e"] = map->e().code();
                m["f"] = map->f().code();
                m["frobenius"] = map->frob_power();
                j["map"] = m;
            }
            return dump(j);
        }
        case OutputFormat::csv: {
            std::string out =
                csv_row({"equivalent", "a", "b", "c", "d", "e", "f", "frobenius"});
            if (map) {
                out += csv_row({"true", std::to_string(map->a().code()),
                                std::to_string(map->b().code()),
                                std::to_string(map->c().code()),
                                std::to_string(map->d().code()),
                                std::to_string(map->e().code()),
                                std::to_string(map->f().code()),
                                std::to_string(map->frob_power())});
            } else {
                out += csv_row({"false", "", "", "", "", "", "", ""});
            }
            return out;
        }
        case OutputFormat::text:
            if (map) return "equivalent: yes\nmap: " + map->str() + "\n";
            return "equivalent: no\n";
    }
    throw std::logic_error("format_equivalence: bad format");
}

std::string format_acceptance(const std::vector<CriterionResult>& rows,
                              OutputFormat fmt) {
    bool ok = all_pass(rows);
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "acceptance";
            j["pass"] = ok;
            ojson arr = ojson::array();
            for (const CriterionResult& r : rows) {
                ojson e;
                e["id"] = r.id;
                e["name"] = r.name;
                e["pass"] = r.pass;
                e["detail"] = r.detail;
                arr.push_back(e);
            }
            j["criteria"] = arr;
            return dump(j);
        }
        case OutputFormat::csv: {
            std::string out = csv_row({"id", "name", "pass", "detail"});
            for (const CriterionResult& r : rows)
                out += csv_row({std::to_string(r.id), r.name,
                                r.pass ? "true" : "false", r.detail});
            return out;
        }
        case OutputFormat::text: {
            std::ostringstream os;
            for (const CriterionResult& r : rows) {
                os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
                if (!r.detail.empty()) os << "  (" << r.detail << ")";
                os << "\n";
            }
            os << "RESULT: " << (ok ? "PASS" : "FAIL") << "\n";
            return os.str();
        }
    }
    throw std::logic_error("format_acceptance: bad format");
}

std::string format_error(const std::string& message, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["schema"] = 1;
            j["record"] = "error";
            j["message"] = message;
            return dump(j);
        }
        case OutputFormat::csv:
            return csv_row({"error"}) + csv_row({message});
        case OutputFormat::text:
            return "error: " + message + "\n";
    }
    throw std::logic_error("format_error: bad format");
}

}  // namespace netarc
