#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "easycat/acceptance.hpp"
#include "easycat/catalog.hpp"
#include "easycat/category_ops.hpp"
#include "easycat/closure.hpp"
#include "easycat/error.hpp"
#include "easycat/linmap.hpp"
#include "easycat/moments.hpp"
#include "easycat/partition.hpp"

namespace py = pybind11;
using namespace easycat;

namespace {

Partition to_partition(const py::object& obj) {
  if (py::isinstance<Partition>(obj)) return obj.cast<Partition>();
  const auto text = obj.cast<std::string>();
  if (text.rfind("P(", 0) == 0 || text.rfind("P (", 0) == 0) return parse_partition(text);
  return named_partition(parse_named_partition(text));
}

std::vector<Partition> to_partitions(const py::iterable& items) {
  std::vector<Partition> out;
  for (const auto& item : items) out.push_back(to_partition(py::reinterpret_borrow<py::object>(item)));
  return out;
}

Rotation to_rotation(const std::string& name) {
  static const std::pair<const char*, Rotation> table[] = {
      {"UpLeft", Rotation::UpLeft},       {"DownLeft", Rotation::DownLeft},
      {"UpRight", Rotation::UpRight},     {"DownRight", Rotation::DownRight},
      {"CycleLeft", Rotation::CycleLeft}, {"CycleRight", Rotation::CycleRight},
  };
  for (const auto& [n, r] : table)
    if (name == n) return r;
  throw UnknownName("unknown rotation '" + name + "'");
}

py::list to_fractions(const MomentSequence& seq) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::list out;
  for (const auto& v : seq.values) out.append(fraction(v.str()));
  return out;
}

py::dict classification_dict(const Classification& c) {
  py::dict d;
  d["world"] = world_text(c);
  d["name"] = name_text(c);
  py::list ev;
  for (const auto& e : c.evidence) ev.append(py::make_tuple(canonical_text(e.witness), e.reason));
  d["evidence"] = ev;
  d["point_budget"] = c.point_budget;
  d["intermediate_budget"] = c.intermediate_budget;
  d["saturated"] = c.saturated;
  d["record"] = to_record(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_easycat, m) {
  m.doc() = "Two-row set partitions, their categories, and the linear maps they define";

  static py::exception<Error> base_error(m, "EasycatError", PyExc_ValueError);
  static py::exception<LimitError> limit_error(m, "LimitError", base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LimitError& e) {
      py::set_error(limit_error, e.what());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::string& text) { return to_partition(py::str(text)); }),
           py::arg("text"))
      .def_property_readonly("upper_count", &Partition::upper_count)
      .def_property_readonly("lower_count", &Partition::lower_count)
      .def_property_readonly("block_count", &Partition::block_count)
      .def("__len__", &Partition::size)
      .def("blocks",
           [](const Partition& p) {
             py::list out;
             for (const auto& b : p.blocks()) {
               py::list block;
               for (const auto& pt : b)
                 block.append((pt.row == Row::Upper ? "u" : "l") + std::to_string(pt.index));
               out.append(block);
             }
             return out;
           })
      .def("is_noncrossing", [](const Partition& p) { return is_noncrossing(p); })
      .def("__str__", [](const Partition& p) { return canonical_text(p); })
      .def("__repr__", [](const Partition& p) { return "Partition('" + canonical_text(p) + "')"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return PartitionHash{}(p); });

  m.def("parse", [](const std::string& text) { return parse_partition(text); }, py::arg("text"));
  m.def("named", [](const std::string& name) { return named_partition(parse_named_partition(name)); },
        py::arg("name"));
  m.def("tensor", [](const py::object& p, const py::object& q) {
    return tensor(to_partition(p), to_partition(q));
  });
  m.def("compose", [](const py::object& p, const py::object& q) {
    const auto r = compose(to_partition(p), to_partition(q));
    return py::make_tuple(r.result, r.removed_loops);
  });
  m.def("involute", [](const py::object& p) { return involute(to_partition(p)); });
  m.def("rotate", [](const py::object& p, const std::string& direction) {
    return rotate(to_partition(p), to_rotation(direction));
  });
  m.def("to_lower_row", [](const py::object& p) { return to_lower_row(to_partition(p)); });

  m.def("in_category", [](const std::string& category, const py::object& p) {
    return in_category(parse_category(category), to_partition(p));
  });
  m.def("enumerate_category", [](const std::string& category, std::size_t points) {
    return enumerate_category(parse_category(category), points);
  });

  py::class_<ClosureSet>(m, "Closure")
      .def_readonly("elements", &ClosureSet::elements)
      .def_readonly("saturated", &ClosureSet::saturated)
      .def_readonly("rounds", &ClosureSet::rounds)
      .def_readonly("point_budget", &ClosureSet::point_budget)
      .def_readonly("intermediate_budget", &ClosureSet::intermediate_budget)
      .def("contains",
           [](const ClosureSet& c, const py::object& p) {
             return closure_contains(c, to_partition(p)) == Membership::Confirmed;
           })
      .def("lower_row", [](const ClosureSet& c, std::size_t k) { return closure_lower_row(c, k); });

  m.def(
      "closure",
      [](const py::iterable& gens, std::size_t budget, std::size_t ibudget) {
        const auto g = to_partitions(gens);
        py::gil_scoped_release release;
        return generate_closure(g, budget, ibudget);
      },
      py::arg("generators"), py::arg("point_budget") = kDefaultPointBudget,
      py::arg("intermediate_budget") = kDefaultIntermediateBudget);

  m.def(
      "classify",
      [](const py::iterable& gens, const std::string& mode, std::size_t budget,
         std::size_t ibudget) {
        const auto g = to_partitions(gens);
        Classification c;
        if (mode == "noncrossing")
          c = classify_noncrossing(g);
        else if (mode == "classical")
          c = classify_classical(g);
        else if (mode == "easy")
          c = classify_easy(g, {budget, ibudget});
        else
          throw UnknownName("unknown mode '" + mode + "'");
        return classification_dict(c);
      },
      py::arg("generators"), py::arg("mode") = "easy",
      py::arg("point_budget") = kDefaultPointBudget,
      py::arg("intermediate_budget") = kDefaultIntermediateBudget);

  m.def(
      "count",
      [](const std::string& category, std::size_t k_max) {
        return to_fractions(count_moments(parse_category(category), k_max));
      },
      py::arg("category"), py::arg("k_max") = 8);

  m.def(
      "moments",
      [](const std::string& law, std::size_t k_max, bool squeeze, bool symmetrize) {
        const NamedLaw& l = named_law(law);
        MomentSequence seq = moments_from_cumulants(l.spec, l.unit, k_max);
        if (squeeze) seq = transform(seq, Transform::Squeeze);
        if (symmetrize) seq = transform(seq, Transform::Symmetrize);
        return to_fractions(seq);
      },
      py::arg("law"), py::arg("k_max") = 8, py::arg("squeeze") = false,
      py::arg("symmetrize") = false);

  m.def(
      "t_matrix",
      [](const py::object& p, std::size_t n) { return IntMatrix(t_matrix(to_partition(p), n).entries); },
      py::arg("partition"), py::arg("n"));

  m.def(
      "check_intertwiner",
      [](const std::string& rep, std::size_t n, const py::object& p, std::size_t samples,
         std::uint64_t seed) {
        return check_intertwiner(classical_rep(parse_rep_kind(rep), n, samples, seed),
                                 to_partition(p));
      },
      py::arg("rep"), py::arg("n"), py::arg("partition"), py::arg("samples") = 20,
      py::arg("seed") = 0);

  m.def(
      "acceptance",
      [](std::vector<int> only, std::uint64_t seed) {
        AcceptanceOptions opt;
        opt.only = std::move(only);
        opt.seed = seed;
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_acceptance(opt);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = std::vector<int>{}, py::arg("seed") = 0);
}
