#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netarc/serialize.hpp"

namespace py = pybind11;
using namespace netarc;

namespace {

// FieldPtr is shared_ptr-to-const, which pybind11 holders do not take;
// a value wrapper keeps the Python surface simple.
struct PyField {
    FieldPtr f;
};

Slope obj_to_slope(const FieldPtr& f, const py::handle& h) {
    if (py::isinstance<py::str>(h)) return parse_slope(f, h.cast<std::string>());
    return Slope::finite(f->element(h.cast<uint32_t>()));
}

py::object slope_to_obj(const Slope& s) {
    if (s.is_infinity()) return py::str("inf");
    return py::int_(s.m().code());
}

py::list slopes_to_list(const std::vector<Slope>& slopes) {
    py::list out;
    for (const Slope& s : slopes) out.append(slope_to_obj(s));
    return out;
}

PointSet objs_to_points(const FieldPtr& f,
                        const std::vector<std::pair<uint32_t, uint32_t>>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (auto [x, y] : pts) out.push_back({f->element(x), f->element(y)});
    return PointSet(std::move(out));
}

py::list points_to_list(const PointSet& s) {
    py::list out;
    for (const Point& p : s) out.append(py::make_tuple(p.x.code(), p.y.code()));
    return out;
}

NetSpec make_net(const FieldPtr& f, const py::object& slopes) {
    if (slopes.is_none()) return NetSpec::full_plane(f);
    std::vector<Slope> ss;
    for (const py::handle& h : slopes) ss.push_back(obj_to_slope(f, h));
    return NetSpec(f, std::move(ss));
}

py::dict construction_dict(const Construction& c) {
    py::dict out;
    out["name"] = c.name;
    out["field"] = c.net.field()->descriptor();
    py::dict params;
    for (const auto& [k, v] : c.params) params[py::str(k)] = v;
    out["params"] = params;
    out["kind"] = to_string(c.expected_kind);
    out["degree"] = c.net.r();
    out["slopes"] = slopes_to_list(c.net.slopes());
    out["points"] = points_to_list(c.points);
    return out;
}

py::dict report_dict(const ArcReport& rep) {
    py::dict out;
    out["kind"] = to_string(rep.kind);
    if (rep.witness.empty()) {
        out["witness"] = py::none();
    } else {
        py::list w;
        for (const Point& p : rep.witness)
            w.append(py::make_tuple(p.x.code(), p.y.code()));
        out["witness"] = w;
    }
    out["missing_slope"] =
        rep.missing_slope ? slope_to_obj(*rep.missing_slope) : py::none();
    if (rep.secant_profile.empty()) {
        out["secant_profile"] = py::none();
    } else {
        py::list prof;
        for (const auto& [s, n] : rep.secant_profile)
            prof.append(py::make_tuple(slope_to_obj(s), n));
        out["secant_profile"] = prof;
    }
    return out;
}

py::dict search_dict(const SearchResult& res) {
    py::dict out;
    out["status"] = to_string(res.status);
    out["nodes"] = res.nodes;
    if (res.witness) {
        py::dict w;
        w["slopes"] = slopes_to_list(res.witness->net.slopes());
        w["points"] = points_to_list(res.witness->points);
        out["witness"] = w;
    } else {
        out["witness"] = py::none();
    }
    out["orbits"] = res.orbit_count ? py::object(py::int_(*res.orbit_count))
                                    : py::object(py::none());
    return out;
}

std::string underscored(std::string s) {
    for (char& ch : s)
        if (ch == '-') ch = '_';
    return s;
}

}  // namespace

PYBIND11_MODULE(netarc, m) {
    m.doc() = "ovals and hyperovals in nets of Desarguesian affine planes";

    py::class_<PyField>(m, "Field")
        .def_static("make",
                    [](uint32_t p, uint32_t k) { return PyField{Field::make(p, k)}; },
                    py::arg("p"), py::arg("k") = 1)
        .def_static("from_order",
                    [](uint64_t q) { return PyField{Field::from_order(q)}; })
        .def_static("parse",
                    [](const std::string& d) { return PyField{Field::parse(d)}; })
        .def_property_readonly("p", [](const PyField& x) { return x.f->p(); })
        .def_property_readonly("k", [](const PyField& x) { return x.f->k(); })
        .def_property_readonly("q", [](const PyField& x) { return x.f->q(); })
        .def("descriptor", [](const PyField& x) { return x.f->descriptor(); })
        .def("__eq__",
             [](const PyField& a, const PyField& b) { return a.f->same(*b.f); })
        .def("__repr__", [](const PyField& x) {
            return "Field(" + x.f->descriptor() + ")";
        });

    m.def(
        "is_arc",
        [](const PyField& f, const std::vector<std::pair<uint32_t, uint32_t>>& pts,
           const py::object& slopes) {
            return report_dict(is_arc(objs_to_points(f.f, pts), make_net(f.f, slopes)));
        },
        py::arg("field"), py::arg("points"), py::arg("slopes") = py::none(),
        "Arc report for a point set against a net; slopes=None means the full "
        "plane");

    m.def("required_slopes",
          [](const PyField& f,
             const std::vector<std::pair<uint32_t, uint32_t>>& pts) {
              return slopes_to_list(required_slopes(objs_to_points(f.f, pts)));
          },
          py::arg("field"), py::arg("points"));

    m.def(
        "find_quads",
        [](const PyField& f, const std::vector<std::pair<uint32_t, uint32_t>>& pts,
           const py::object& slopes) {
            py::list out;
            for (const PointSet& quad :
                 find_quads(objs_to_points(f.f, pts), make_net(f.f, slopes)))
                out.append(points_to_list(quad));
            return out;
        },
        py::arg("field"), py::arg("points"), py::arg("slopes") = py::none());

    m.def(
        "equivalent",
        [](const PyField& f, const std::vector<std::pair<uint32_t, uint32_t>>& a,
           const std::vector<std::pair<uint32_t, uint32_t>>& b) -> py::object {
            auto map = equivalent(objs_to_points(f.f, a), objs_to_points(f.f, b));
            if (!map) return py::none();
            py::dict out;
            out["a"] = map->a().code();
            out["b"] = map->b().code();
            out["c"] = map->c().code();
            out["d"] = map->d().code();
            out["e"] = map->e().code();
            out["f"] = map->f().code();
            out["frobenius"] = map->frob_power();
            return out;
        },
        py::arg("field"), py::arg("a"), py::arg("b"),
        "Collineation mapping a onto b as a dict, or None");

    m.def("construction_names", &construction_names);

    m.def(
        "construct",
        [](const std::string& name, const py::object& field,
           const std::map<std::string, std::string>& params) {
            std::string n = underscored(name);
            FieldPtr f;
            if (!field.is_none())
                f = field.cast<PyField>().f;
            else if (n == "gf8_quadfree_hyperoval")
                f = Field::make(2, 3);
            else
                throw std::invalid_argument("construct: field is required for " + n);
            return construction_dict(make_construction(n, f, params));
        },
        py::arg("name"), py::arg("field") = py::none(),
        py::arg("params") = std::map<std::string, std::string>{});

    m.def("constructions_for", [](const PyField& f) {
        py::list out;
        for (const Construction& c : constructions_for(f.f))
            out.append(construction_dict(c));
        return out;
    });

    m.def(
        "search",
        [](const PyField& f, uint32_t r, const std::string& kind, bool orbits,
           uint64_t max_nodes, uint64_t max_secs) {
            SearchTask task{f.f, r, parse_kind(kind),
                            orbits ? SearchMode::enumerate_orbits
                                   : SearchMode::decide,
                            Budget{max_nodes, max_secs * 1000}};
            return search_dict(exists_arc(task));
        },
        py::arg("field"), py::arg("r"), py::arg("kind"), py::arg("orbits") = false,
        py::arg("max_nodes") = Budget{}.max_nodes,
        py::arg("max_secs") = Budget{}.max_millis / 1000);

    m.def("oval_degrees", [](const PyField& f) {
        auto s = table_O_d(f.f);
        return std::vector<uint32_t>(s.begin(), s.end());
    });

    m.def("hyperoval_degrees", [](const PyField& f) {
        auto s = table_H_d(f.f);
        return std::vector<uint32_t>(s.begin(), s.end());
    });

    m.def(
        "count_orbits",
        [](const PyField& f, uint32_t r, const std::string& kind) {
            return count_orbits(f.f, r, parse_kind(kind));
        },
        py::arg("field"), py::arg("r"), py::arg("kind"));
}
