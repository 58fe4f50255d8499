#include "netarc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netarc/serialize.hpp"

namespace netarc {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;

std::string underscored(std::string s) {
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

uint64_t parse_u64(const std::string& s, const char* what) {
    size_t pos = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size())
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    return v;
}

// default budget, overridden by NETS_BUDGET_NODES / NETS_BUDGET_SECS, in turn
// overridden by explicit flags
Budget resolve_budget(std::optional<uint64_t> nodes_flag,
                      std::optional<uint64_t> secs_flag) {
    Budget b{};
    if (const char* env = std::getenv("NETS_BUDGET_NODES"))
        b.max_nodes = parse_u64(env, "NETS_BUDGET_NODES");
    if (const char* env = std::getenv("NETS_BUDGET_SECS"))
        b.max_millis = parse_u64(env, "NETS_BUDGET_SECS") * 1000;
    if (nodes_flag) b.max_nodes = *nodes_flag;
    if (secs_flag) b.max_millis = *secs_flag * 1000;
    return b;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ' || ch == ';' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// "5", "2..9" or "2,3,4"; ranges keep only prime powers, explicit lists
// reject anything that is not one
std::vector<uint64_t> parse_q_list(const std::string& spec) {
    std::vector<uint64_t> out;
    size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        uint64_t lo = parse_u64(spec.substr(0, dots), "q range");
        uint64_t hi = parse_u64(spec.substr(dots + 2), "q range");
        if (lo < 2 || hi < lo)
            throw std::invalid_argument("q range '" + spec + "' is empty");
        for (uint64_t q = lo; q <= hi; ++q) {
            try {
                Field::from_order(q);
            } catch (const std::invalid_argument&) {
                continue;
            }
            out.push_back(q);
        }
        if (out.empty())
            throw std::invalid_argument("q range '" + spec +
                                        "' holds no prime powers");
        return out;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        uint64_t q = parse_u64(tok, "q");
        Field::from_order(q);  // throws on non prime powers
        out.push_back(q);
    }
    if (out.empty()) throw std::invalid_argument("no q values in '" + spec + "'");
    return out;
}

struct ConstructArgs {
    std::string name;
    std::string field;
    std::vector<std::string> params;
};

int do_construct(const ConstructArgs& a, OutputFormat fmt, std::ostream& out) {
    std::string name = underscored(a.name);
    auto names = construction_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string msg = "unknown construction '" + a.name + "'; valid names:";
        for (const std::string& n : names) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    FieldPtr f;
    if (!a.field.empty()) {
        f = Field::parse(a.field);
    } else if (name == "gf8_quadfree_hyperoval") {
        f = Field::make(2, 3);
    } else {
        throw std::invalid_argument("--field is required for " + name);
    }
    std::map<std::string, std::string> params;
    for (const std::string& kv : a.params) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    Construction c = make_construction(name, f, params);
    if (is_arc(c.points, c.net).kind != c.expected_kind)
        throw std::logic_error("construction failed re-verification");
    out << format_construction(c, fmt);
    return kOk;
}

struct VerifyArgs {
    std::string points_path;
    std::string inline_points;
    std::string field;
    std::string slopes;
    std::string expect;
};

int do_verify(const VerifyArgs& a, OutputFormat fmt, std::ostream& out) {
    FieldPtr f;
    PointSet pts;
    if (!a.points_path.empty()) {
        auto loaded = load_points_file(a.points_path);
        f = loaded.first;
        pts = loaded.second;
        if (!a.field.empty() && !f->same(*Field::parse(a.field)))
            throw std::invalid_argument("--field disagrees with the points file");
    } else if (!a.inline_points.empty()) {
        if (a.field.empty())
            throw std::invalid_argument("--field is required with --points-inline");
        f = Field::parse(a.field);
        std::vector<Point> raw;
        for (const std::string& tok : split_tokens(a.inline_points))
            raw.push_back(parse_point(f, tok));
        pts = PointSet(std::move(raw));
    } else {
        throw std::invalid_argument("verify needs --points FILE or --points-inline");
    }
    NetSpec net(f, parse_slope_list(f, a.slopes));
    ArcReport rep = is_arc(pts, net);
    out << format_arc_report(net, pts, rep, fmt);
    if (!a.expect.empty()) {
        if (a.expect != "arc" && a.expect != "oval" && a.expect != "hyperoval")
            throw std::invalid_argument("--expect must be arc, oval or hyperoval");
        bool ok = a.expect == "arc" ? rep.is_arc() : to_string(rep.kind) == a.expect;
        return ok ? kOk : kVerifyFail;
    }
    return rep.is_arc() ? kOk : kVerifyFail;
}

struct SearchArgs {
    std::string field;
    uint32_t r = 0;
    std::string kind;
    bool orbits = false;
    std::optional<uint64_t> max_nodes;
    std::optional<uint64_t> max_secs;
};

int do_search(const SearchArgs& a, OutputFormat fmt, bool timing,
              std::ostream& out) {
    FieldPtr f = Field::parse(a.field);
    ArcKind kind = parse_kind(a.kind);
    if (a.orbits && f->q() > 11)
        throw std::invalid_argument("orbit enumeration stops at q = 11");
    SearchTask task{f, a.r, kind,
                    a.orbits ? SearchMode::enumerate_orbits : SearchMode::decide,
                    resolve_budget(a.max_nodes, a.max_secs)};
    SearchResult res = exists_arc(task);
    out << format_search(task, res, fmt, timing);
    return res.status == SearchStatus::budget_exceeded ? kBudget : kOk;
}

struct TableArgs {
    std::string kind;
    std::string q_spec;
    std::optional<uint64_t> max_nodes;
    std::optional<uint64_t> max_secs;
};

int do_table(const TableArgs& a, OutputFormat fmt, bool timing, std::ostream& out) {
    ArcKind kind = parse_kind(a.kind);
    std::vector<uint64_t> qs = parse_q_list(a.q_spec);
    uint64_t cap = kind == ArcKind::oval ? 11 : 13;
    for (uint64_t q : qs)
        if (q > cap)
            throw std::invalid_argument("full " + to_string(kind) +
                                        " tables stop at q = " + std::to_string(cap));
    Budget budget = resolve_budget(a.max_nodes, a.max_secs);
    std::vector<TableCell> cells;
    int code = kOk;
    for (uint64_t q : qs) {
        FieldPtr f = Field::from_order(q);
        uint32_t step = kind == ArcKind::hyperoval ? 2 : 1;
        for (uint32_t r = 3; r <= q + 1 && code == kOk; r += step) {
            SearchResult res = exists_arc({f, r, kind, SearchMode::decide, budget});
            cells.push_back({q, r, kind, res.status, res.nodes, res.millis});
            if (res.status == SearchStatus::budget_exceeded) code = kBudget;
        }
        if (code != kOk) break;
    }
    out << format_table(kind, cells, fmt, timing);
    return code;
}

int do_equiv(const std::string& path_a, const std::string& path_b,
             OutputFormat fmt, std::ostream& out) {
    auto loaded_a = load_points_file(path_a);
    auto loaded_b = load_points_file(path_b);
    if (!loaded_a.first->same(*loaded_b.first))
        throw std::invalid_argument("point sets live over different fields");
    std::optional<Collineation> map = equivalent(loaded_a.second, loaded_b.second);
    if (map && map->apply(loaded_a.second) != loaded_b.second)
        throw std::logic_error("equivalence witness failed re-verification");
    out << format_equivalence(loaded_a.first, map, fmt);
    return map ? kOk : kVerifyFail;
}

int do_suite(OutputFormat fmt, std::ostream& out) {
    std::vector<CriterionResult> rows = run_acceptance_battery();
    out << format_acceptance(rows, fmt);
    return all_pass(rows) ? kOk : kVerifyFail;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ovals and hyperovals in nets of Desarguesian affine planes"};
    app.name("netarc");
    std::string format_name = "text";
    bool timing = false;
    app.add_option("--format", format_name, "output format: json, csv or text")
        ->capture_default_str();
    app.add_flag("--timing", timing, "include wall-clock milliseconds in records");
    app.require_subcommand(0, 1);

    ConstructArgs ca;
    auto* construct =
        app.add_subcommand("construct", "build a named oval or hyperoval recipe");
    construct->add_option("name", ca.name, "construction name")->required();
    construct->add_option("--field", ca.field, "field descriptor, e.g. 7 or 2^3");
    construct->add_option("--param", ca.params,
                          "key=value parameter (k, r, line, which)");

    VerifyArgs va;
    auto* verify =
        app.add_subcommand("verify", "check a point set against a net");
    verify->add_option("--points", va.points_path,
                       "points file: field descriptor line, then cx,cy lines");
    verify->add_option("--points-inline", va.inline_points,
                       "points written inline: \"0,0 1,1 2,4\"");
    verify->add_option("--field", va.field, "field descriptor");
    verify->add_option("--slopes", va.slopes,
                       "net slopes as codes with inf, e.g. 0,1,inf,3")
        ->required();
    verify->add_option("--expect", va.expect, "fail unless kind is arc|oval|hyperoval");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "decide one existence cell");
    search->add_option("--field", sa.field, "field descriptor")->required();
    search->add_option("--r", sa.r, "net degree")->required();
    search->add_option("--kind", sa.kind, "oval or hyperoval")->required();
    search->add_flag("--orbits", sa.orbits, "enumerate equivalence classes");
    std::optional<uint64_t> s_nodes, s_secs;
    search->add_option("--max-nodes", s_nodes, "search node budget");
    search->add_option("--max-secs", s_secs, "search time budget in seconds");

    TableArgs ta;
    auto* table =
        app.add_subcommand("table", "existence table over a range of fields");
    table->add_option("--kind", ta.kind, "oval or hyperoval")->required();
    table->add_option("--q", ta.q_spec, "field orders: 8, 2..9 or 2,3,4")
        ->required();
    std::optional<uint64_t> t_nodes, t_secs;
    table->add_option("--max-nodes", t_nodes, "per-cell node budget");
    table->add_option("--max-secs", t_secs, "per-cell time budget in seconds");

    std::string ea, eb;
    auto* equiv = app.add_subcommand(
        "equiv", "test two point sets for affine equivalence");
    equiv->add_option("a", ea, "first points file")->required();
    equiv->add_option("b", eb, "second points file")->required();

    auto* suite =
        app.add_subcommand("suite", "run the full verification battery");

    // let --format / --timing appear after the subcommand as well
    for (CLI::App* sub : {construct, verify, search, table, equiv, suite})
        sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        OutputFormat fmt = OutputFormat::text;
        try {
            fmt = parse_format(format_name);
        } catch (const std::invalid_argument&) {
        }
        out << format_error(e.what(), fmt);
        err << e.what() << "\n";
        return kBadInput;
    }

    OutputFormat fmt = OutputFormat::text;
    try {
        fmt = parse_format(format_name);
        sa.max_nodes = s_nodes;
        sa.max_secs = s_secs;
        ta.max_nodes = t_nodes;
        ta.max_secs = t_secs;
        if (construct->parsed()) return do_construct(ca, fmt, out);
        if (verify->parsed()) return do_verify(va, fmt, out);
        if (search->parsed()) return do_search(sa, fmt, timing, out);
        if (table->parsed()) return do_table(ta, fmt, timing, out);
        if (equiv->parsed()) return do_equiv(ea, eb, fmt, out);
        if (suite->parsed()) return do_suite(fmt, out);
        out << app.help();
        return kBadInput;
    } catch (const BudgetExceeded& e) {
        out << format_error(e.what(), fmt);
        err << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        out << format_error(e.what(), fmt);
        err << e.what() << "\n";
        return kBadInput;
    } catch (const std::runtime_error& e) {
        out << format_error(e.what(), fmt);
        err << e.what() << "\n";
        return kBadInput;
    }
}

}  // namespace netarc
