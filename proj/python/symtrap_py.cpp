#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symtrap/branching.hpp"
#include "symtrap/characters.hpp"
#include "symtrap/errors.hpp"
#include "symtrap/mapping.hpp"
#include "symtrap/oracle.hpp"
#include "symtrap/oscillator.hpp"
#include "symtrap/snippet.hpp"

namespace py = pybind11;
using namespace symtrap;

namespace {

// Exact conversion; counts can exceed 64 bits.
py::int_ to_py(const Count& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  if (den == 1) return to_py(num);
  return py::module_::import("fractions").attr("Fraction")(to_py(num), to_py(den));
}

Partition shape_arg(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return Partition::parse(h.cast<std::string>());
  return Partition(h.cast<std::vector<int>>());
}

int parity_arg(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw InvalidInput("parity must be '+' or '-', got '" + s + "'");
}

LambdaParity lambda_parity_arg(const std::string& s) {
  if (s == "even") return LambdaParity::Even;
  if (s == "odd") return LambdaParity::Odd;
  throw InvalidInput("lambda parity must be 'even' or 'odd', got '" + s + "'");
}

Regime regime_arg(const std::string& s) {
  if (s == "g0") return Regime::GZero;
  if (s == "ginf") return Regime::GInfinite;
  throw InvalidInput("regime must be 'g0' or 'ginf', got '" + s + "'");
}

// Ordered {irrep label: count}.
py::dict reduction_dict(const MultiplicityVector& v) {
  py::dict d;
  for (std::size_t i = 0; i < v.size(); ++i) d[py::str(v.irreps[i].to_string())] = to_py(v.counts[i]);
  return d;
}

py::tuple label_tuple(const HypercylindricalLabel& h) { return py::make_tuple(h.nu_R, h.nu_rho, h.lambda); }

py::dict state_dict(const StateLabel& s) {
  py::dict d;
  d["label"] = label_tuple(s.hyper);
  d["irrep"] = s.p.to_string();
  d["parity"] = s.pi > 0 ? "+" : "-";
  d["tau"] = s.tau;
  d["regime"] = to_string(s.regime);
  d["energy"] = s.hyper.energy(s.p.n()).to_string();
  d["component"] = s.component ? py::object(py::str(s.component->to_string())) : py::object(py::none());
  d["text"] = s.to_string();
  return d;
}

py::list sector_amplitudes(const SectorVector& v) {
  py::list out;
  for (const auto& a : v.amplitudes) out.append(to_py(a));
  return out;
}

}  // namespace

PYBIND11_MODULE(_symtrap, m) {
  m.doc() = "Permutation-symmetry bookkeeping for N particles in a one-dimensional harmonic trap";

  auto error = py::register_exception<Error>(m, "Error");
  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
  py::register_exception<DimensionGuardExceeded>(m, "DimensionGuardExceeded", invalid.ptr());
  py::register_exception<NotRepresentationCharacter>(m, "NotRepresentationCharacter", error.ptr());
  py::register_exception<AlgorithmViolation>(m, "AlgorithmViolation", error.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", error.ptr());
  py::register_exception<ConsistencyFailure>(m, "ConsistencyFailure", error.ptr());

  m.def("partitions", [](int n) {
    py::list out;
    for (const auto& p : partitions_of(n)) out.append(py::cast(p.part_vector()));
    return out;
  }, py::arg("n"), "Partitions of n, [n] first.");

  m.def("format_partition", [](const py::handle& shape) { return shape_arg(shape).to_string(); }, py::arg("shape"));
  m.def("conjugate", [](const py::handle& shape) { return conjugate(shape_arg(shape)).part_vector(); }, py::arg("shape"));
  m.def("irrep_dimension", [](const py::handle& shape) { return to_py(irrep_dimension(shape_arg(shape))); }, py::arg("shape"));

  m.def("character", [](const py::handle& shape, const py::handle& cycles) {
    return character(shape_arg(shape), CycleType{shape_arg(cycles)});
  }, py::arg("shape"), py::arg("cycle_type"));

  m.def("character_table", [](int n, const std::string& group) {
    if (group != "sn" && group != "snz2") throw InvalidInput("group must be 'sn' or 'snz2'");
    const CharacterTable t = group == "sn" ? character_table_sn(n) : character_table_snz2(n);
    py::dict d;
    py::list classes, irreps, sizes, values;
    for (const auto& c : t.classes()) classes.append(c.to_string());
    for (const auto& i : t.irreps()) irreps.append(i.to_string());
    for (const auto& s : t.class_sizes()) sizes.append(to_py(s));
    for (std::size_t r = 0; r < t.irreps().size(); ++r) {
      auto row = t.row(r);
      values.append(py::cast(std::vector<std::int64_t>(row.begin(), row.end())));
    }
    d["classes"] = classes;
    d["irreps"] = irreps;
    d["class_sizes"] = sizes;
    d["values"] = values;
    d["order"] = to_py(t.order());
    return d;
  }, py::arg("n"), py::arg("group") = "sn");

  m.def("sector_characters", [](int n, const std::string& parity) {
    return sector_rep_characters(n, lambda_parity_arg(parity)).values;
  }, py::arg("n"), py::arg("lambda_parity"));

  m.def("shell_dimension", [](int n, int x) { return to_py(shell_dimension(n, x)); }, py::arg("n"), py::arg("x"));
  m.def("hyperangular_dimension", [](int n, int lambda) { return to_py(hyperangular_dimension(n, lambda)); },
        py::arg("n"), py::arg("lam"));
  m.def("shell_reduction", [](int n, int x) { return reduction_dict(shell_reduction(n, x)); }, py::arg("n"), py::arg("x"));
  m.def("lambda_reduction", [](int n, int lambda) { return reduction_dict(lambda_reduction(n, lambda)); },
        py::arg("n"), py::arg("lam"));
  m.def("snippet_reduction", [](int n, const std::string& parity) {
    return reduction_dict(snippet_reduction(n, lambda_parity_arg(parity)));
  }, py::arg("n"), py::arg("lambda_parity"));

  m.def("branch_multiplicity", [](const py::handle& shape, const std::string& pattern) {
    return to_py(branch_multiplicity(shape_arg(shape), ComponentPattern::parse(pattern)));
  }, py::arg("shape"), py::arg("pattern"));
  m.def("component_degeneracy", [](int n, int lambda, const std::string& pattern) {
    return to_py(component_degeneracy(n, lambda, ComponentPattern::parse(pattern)));
  }, py::arg("n"), py::arg("lam"), py::arg("pattern"));
  m.def("shell_degeneracy", [](int n, int x, const std::string& pattern) {
    return to_py(cumulative_shell_degeneracy(n, x, ComponentPattern::parse(pattern)));
  }, py::arg("n"), py::arg("x"), py::arg("pattern"));
  m.def("spin_decomposition", [](int n, int k) { return reduction_dict(spin_decomposition(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("sectors", [](int n) {
    py::list out;
    for (const auto& s : sectors(n)) out.append(s.to_string());
    return out;
  }, py::arg("n"));

  m.def("sector_basis", [](int n, const std::string& lambda_parity, const py::handle& shape, const std::string& parity) {
    py::list out;
    for (const auto& v : snippet_projection_basis(n, lambda_parity_arg(lambda_parity), shape_arg(shape), parity_arg(parity))) {
      py::dict d;
      d["tau"] = v.label.tau;
      d["j"] = v.label.j;
      d["amplitudes"] = sector_amplitudes(v.vector);
      d["squared_norm"] = to_py(v.vector.squared_norm);
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("lambda_parity"), py::arg("shape"), py::arg("parity"));

  m.def("component_basis", [](int n, const std::string& lambda_parity, const py::handle& shape, const std::string& parity,
                              const std::string& pattern) {
    py::list out;
    for (const auto& v : component_projection_basis(n, lambda_parity_arg(lambda_parity), shape_arg(shape),
                                                    parity_arg(parity), ComponentPattern::parse(pattern))) {
      py::dict d;
      d["amplitudes"] = sector_amplitudes(v);
      d["squared_norm"] = to_py(v.squared_norm);
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("lambda_parity"), py::arg("shape"), py::arg("parity"), py::arg("pattern"));

  m.def("spectrum", [](int n, const py::handle& shape, const std::string& parity, const std::string& regime,
                       int max_energy, int nu_r) {
    py::list out;
    const GNLabel mu{nu_r, parity_arg(parity), shape_arg(shape)};
    for (const auto& e : spectrum_by_irrep(n, regime_arg(regime), mu, max_energy)) {
      py::dict d;
      d["label"] = label_tuple(e.label);
      d["energy"] = e.energy.to_string();
      d["multiplicity"] = to_py(e.multiplicity);
      d["convention_ordered"] = e.convention_ordered;
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("shape"), py::arg("parity"), py::arg("regime") = "g0", py::arg("max_energy") = 12,
     py::arg("nu_r") = 0);

  m.def("adiabatic_map", [](int n, std::tuple<int, int, int> label, const py::handle& shape, int tau,
                            std::optional<int> search_ceiling) {
    StateLabel s;
    s.hyper = {std::get<0>(label), std::get<1>(label), std::get<2>(label)};
    s.p = shape_arg(shape);
    s.pi = s.hyper.relative_parity();
    s.tau = tau;
    const MapResult r = adiabatic_map(n, s, search_ceiling);
    py::dict d;
    d["source"] = state_dict(r.source);
    d["target"] = label_tuple(r.target_label);
    d["target_energy"] = r.target_label.energy(n).to_string();
    d["target_tau"] = r.target_tau;
    d["target_dimension"] = to_py(r.target_dimension);
    d["resolved"] = r.resolved;
    d["convention_ordered"] = r.convention_ordered;
    return d;
  }, py::arg("n"), py::arg("label"), py::arg("shape"), py::arg("tau") = 0, py::arg("search_ceiling") = py::none());

  m.def("ground_state", [](int n, const std::string& pattern, const std::string& regime, std::optional<int> search_ceiling) {
    py::list out;
    for (const auto& s : ground_state(n, ComponentPattern::parse(pattern), regime_arg(regime), search_ceiling))
      out.append(state_dict(s));
    return out;
  }, py::arg("n"), py::arg("pattern"), py::arg("regime") = "g0", py::arg("search_ceiling") = py::none());

  m.def("verify_sector_oracle", [](int n) {
    const SectorOracle o = explicit_sector_rep(n);
    verify_group_relations(o.even);
    verify_group_relations(o.odd);
    return o.even_reduction == snippet_reduction(n, LambdaParity::Even) &&
           o.odd_reduction == snippet_reduction(n, LambdaParity::Odd);
  }, py::arg("n"), "Cross-check the sector reductions against explicit signed permutation matrices.");

  m.def("verify_shell_oracle", [](int n, int x) {
    const ShellOracle o = explicit_shell_rep(n, x);
    verify_group_relations(o.rep);
    return o.reduction == shell_reduction(n, x);
  }, py::arg("n"), py::arg("x"));
}
