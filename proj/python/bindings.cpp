#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsq/explore.hpp"
#include "nsq/families.hpp"
#include "nsq/json_io.hpp"
#include "nsq/quotient.hpp"
#include "nsq/rank.hpp"
#include "nsq/semigroup.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nsq::json& j) {
  switch (j.type()) {
    case nsq::json::value_t::null:
      return py::none();
    case nsq::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nsq::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nsq::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nsq::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nsq::json::value_t::string:
      return py::str(j.get<std::string>());
    case nsq::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nsq::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

}  // namespace

PYBIND11_MODULE(_nsq, m) {
  m.doc() = "numerical semigroup quotients: exact membership, quotient-rank certificates, "
            "counterexample families and randomized censuses";

  py::register_exception<nsq::Error>(m, "NsqError");

  py::class_<nsq::NumericalSemigroup>(m, "NumericalSemigroup")
      .def_static("from_generators",
                  [](const std::vector<nsq::i64>& gens) {
                    return nsq::NumericalSemigroup::from_generators(gens);
                  },
                  py::arg("gens"))
      .def_static("naturals", &nsq::NumericalSemigroup::naturals)
      .def_property_readonly("min_gens", &nsq::NumericalSemigroup::min_gens)
      .def_property_readonly("content", &nsq::NumericalSemigroup::content)
      .def_property_readonly("multiplicity", &nsq::NumericalSemigroup::multiplicity)
      .def_property_readonly("frobenius", &nsq::NumericalSemigroup::frobenius)
      .def_property_readonly("genus", &nsq::NumericalSemigroup::genus)
      .def_property_readonly("embedding_dim", &nsq::NumericalSemigroup::embedding_dim)
      .def_property_readonly("apery", &nsq::NumericalSemigroup::apery)
      .def("contains", &nsq::NumericalSemigroup::contains, py::arg("t"))
      .def("apery_set", &nsq::NumericalSemigroup::apery_set, py::arg("n"))
      .def("gaps", &nsq::NumericalSemigroup::gaps)
      .def("is_med", &nsq::NumericalSemigroup::is_med)
      .def("is_naturals", &nsq::NumericalSemigroup::is_naturals)
      .def("to_dict", [](const nsq::NumericalSemigroup& s) { return json_to_py(nsq::to_json(s)); })
      .def("__eq__",
           [](const nsq::NumericalSemigroup& a, const nsq::NumericalSemigroup& b) { return a == b; })
      .def("__repr__", [](const nsq::NumericalSemigroup& s) { return nsq::render_semigroup(s); });

  py::class_<nsq::QuotientRep>(m, "QuotientRep")
      .def(py::init([](std::vector<nsq::i64> num, nsq::i64 den, nsq::i64 scale) {
             return nsq::QuotientRep{scale, std::move(num), den};
           }),
           py::arg("num"), py::arg("den") = 1, py::arg("scale") = 1)
      .def_readwrite("scale", &nsq::QuotientRep::scale)
      .def_readwrite("num", &nsq::QuotientRep::num_gens)
      .def_readwrite("den", &nsq::QuotientRep::den)
      .def("__eq__", [](const nsq::QuotientRep& a, const nsq::QuotientRep& b) { return a == b; })
      .def("__repr__", [](const nsq::QuotientRep& r) { return nsq::render_rep(r); });

  m.def("quotient", &nsq::quotient, py::arg("s"), py::arg("d"));
  m.def("scale", &nsq::scale, py::arg("s"), py::arg("c"));
  m.def("add", &nsq::add, py::arg("s"), py::arg("t"));
  m.def("quotient_sum_coprime", &nsq::quotient_sum_coprime, py::arg("a"), py::arg("b"));
  m.def("normalize_rep", &nsq::normalize_rep, py::arg("rep"));
  m.def("verify_rep", &nsq::verify_rep, py::arg("s"), py::arg("rep"));
  m.def("evaluate", &nsq::evaluate, py::arg("rep"));

  m.def("full_rank_certificate", [](const nsq::NumericalSemigroup& s) {
    return json_to_py(nsq::to_json(nsq::full_rank_certificate(s), s.min_gens()));
  });
  m.def("pm_ordering", &nsq::pm_ordering, py::arg("s"));
  m.def(
      "subset_halving_search",
      [](const nsq::NumericalSemigroup& s, const std::vector<nsq::i64>& elems) -> py::object {
        const auto mask = nsq::subset_halving_search(s, elems);
        if (!mask) return py::none();
        return py::cast(nsq::mask_indices(*mask));
      },
      py::arg("s"), py::arg("elems"));
  m.def(
      "not_k_quotient_search",
      [](const nsq::NumericalSemigroup& s, int k, nsq::i64 element_bound, nsq::i64 pool_limit) {
        nsq::SearchBudgets b;
        if (pool_limit > 0) b.pool_limit = pool_limit;
        return json_to_py(nsq::to_json(nsq::not_k_quotient_search(s, k, element_bound, b),
                                       s.min_gens()));
      },
      py::arg("s"), py::arg("k"), py::arg("element_bound"), py::arg("pool_limit") = 0);
  m.def(
      "k_quotient_rep_search",
      [](const nsq::NumericalSemigroup& s, int k, nsq::i64 d_max, nsq::i64 gen_bound) {
        return nsq::k_quotient_rep_search(s, k, d_max, gen_bound);
      },
      py::arg("s"), py::arg("k"), py::arg("d_max") = 8, py::arg("gen_bound") = 0);
  m.def(
      "med_decomposition",
      [](const nsq::NumericalSemigroup& s) {
        const auto med = nsq::med_decomposition(s);
        py::dict out;
        out["status"] = med.status == nsq::MedStatus::Verified ? "verified" : "search_exhausted";
        out["s1_gens"] = med.s1_gens;
        out["s2_gens"] = med.s2_gens;
        if (med.rep) out["rep"] = py::cast(*med.rep);
        return out;
      },
      py::arg("s"));
  m.def(
      "quotient_rank_bounds",
      [](const nsq::NumericalSemigroup& s) {
        return json_to_py(nsq::to_json(nsq::quotient_rank_bounds(s), s));
      },
      py::arg("s"));

  m.def("popcount", &nsq::popcount, py::arg("j"));
  m.def(
      "noquotient_family",
      [](int k, nsq::i64 a) { return json_to_py(nsq::to_json(nsq::noquotient_family(k, a))); },
      py::arg("k"), py::arg("a"));
  m.def(
      "verify_noquotient_instance",
      [](int k, nsq::i64 a) {
        return json_to_py(nsq::to_json(nsq::verify_noquotient_instance(nsq::noquotient_family(k, a))));
      },
      py::arg("k"), py::arg("a"));
  m.def(
      "nointersection_family",
      [](int k, nsq::i64 a, bool allow_boundary) {
        return json_to_py(nsq::to_json(nsq::nointersection_family(k, a, allow_boundary)));
      },
      py::arg("k"), py::arg("a"), py::arg("allow_boundary") = false);
  m.def(
      "verify_nointersection_instance",
      [](int k, nsq::i64 a, bool allow_boundary) {
        return json_to_py(nsq::to_json(
            nsq::verify_nointersection_instance(nsq::nointersection_family(k, a, allow_boundary))));
      },
      py::arg("k"), py::arg("a"), py::arg("allow_boundary") = false);
  m.def("arithmetical_family", &nsq::arithmetical_family, py::arg("a"), py::arg("d"), py::arg("k"));
  m.def("generalized_arithmetical_family", &nsq::generalized_arithmetical_family, py::arg("a"),
        py::arg("h"), py::arg("d"), py::arg("k"));

  m.def("genus_counts", [](int g_max) { return nsq::genus_counts(g_max); }, py::arg("g_max"));
  m.def(
      "enumerate_fixed",
      [](int m, int g) { return nsq::enumerate_fixed(m, g); },
      py::arg("m"), py::arg("g"));
  m.def(
      "sample_box",
      [](int n, nsq::i64 m_bound, std::uint64_t seed, nsq::i64 trial_index) {
        return nsq::sample_box(nsq::BoxModelParams{n, m_bound, 1, seed, false}, trial_index);
      },
      py::arg("n"), py::arg("m_bound"), py::arg("seed"), py::arg("trial_index"));
  m.def(
      "box_experiment",
      [](int n, const std::vector<nsq::i64>& m_values, nsq::i64 trials, std::uint64_t seed,
         int threads, bool coprime) {
        nsq::BoxModelParams base{n, 0, trials, seed, coprime};
        py::list out;
        for (const auto& rec : nsq::box_experiment(base, m_values, threads))
          out.append(json_to_py(nsq::to_json(rec)));
        return out;
      },
      py::arg("n"), py::arg("m_values"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("coprime") = false);
  m.def(
      "box_exhaustive",
      [](int n, nsq::i64 m_bound) { return json_to_py(nsq::to_json(nsq::box_exhaustive(n, m_bound))); },
      py::arg("n"), py::arg("m_bound"));
  m.def(
      "rank_census",
      [](int m, int g, int threads) {
        const auto pop = nsq::enumerate_fixed(m, g);
        return json_to_py(nsq::to_json(nsq::rank_census(pop, {}, threads)));
      },
      py::arg("m"), py::arg("g"), py::arg("threads") = 1);
}
