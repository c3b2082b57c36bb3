#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballot/clusters.hpp"
#include "ballot/decomp.hpp"
#include "ballot/enumerate.hpp"
#include "ballot/patterns.hpp"
#include "ballot/series.hpp"
#include "ballot/statistics.hpp"
#include "ballot/verify.hpp"
#include "ballot/walks.hpp"

namespace py = pybind11;
using namespace ballot;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

Permutation from_list(const std::vector<int>& w) {
  return Permutation::from_word(w);
}

WalkKind walk_kind(const std::string& s) {
  if (s == "gessel") return WalkKind::Gessel;
  if (s == "gb") return WalkKind::GB;
  throw std::invalid_argument("kind must be gessel or gb");
}

WalkMethod walk_method(const std::string& s) {
  if (s == "step_dp") return WalkMethod::StepDp;
  if (s == "recurrence") return WalkMethod::Recurrence;
  if (s == "brute") return WalkMethod::Brute;
  throw std::invalid_argument("method must be step_dp, recurrence or brute");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ballot permutations, odd-order bijections, pattern counting and "
            "quarter-plane walks";

  m.def("statistics", [](const std::vector<int>& w) {
    const auto s = statistics(from_list(w));
    py::dict d;
    d["asc"] = s.asc;
    d["des"] = s.des;
    d["exc"] = s.exc;
    d["exc_tilde"] = s.exc_tilde;
    return d;
  });

  m.def("peaks", [](const std::vector<int>& w) {
    const auto r = peaks(from_list(w));
    auto conv = [](const std::set<PeakEntry>& s) {
      py::list out;
      for (const auto& [b, ac] : s)
        out.append(py::make_tuple(b, py::make_tuple(ac.first, ac.second)));
      return out;
    };
    return py::make_tuple(conv(r.peak_set), conv(r.cpeak_set));
  });

  m.def("heights", [](const std::vector<int>& w, int start) {
    return ballot_profile(from_list(w), start).heights;
  }, py::arg("word"), py::arg("start") = 0);

  m.def("is_ballot", [](const std::vector<int>& w) { return is_ballot(from_list(w)); });
  m.def("is_dyck", [](const std::vector<int>& w) { return is_dyck(from_list(w)); });
  m.def("is_odd_order",
        [](const std::vector<int>& w) { return is_odd_order(from_list(w)); });

  m.def("cycle_decompose", [](const std::vector<int>& w) {
    return CycleSystem::of(from_list(w)).cycles();
  });
  m.def("cycles_to_permutation", [](std::vector<std::vector<int>> cycles) {
    return CycleSystem::from_cycles(std::move(cycles)).to_permutation().word();
  });

  m.def("psi_map", [](const std::vector<int>& w) {
    return Psi(from_list(w)).cycles();
  }, "ballot word -> odd order cycles");
  m.def("psi_inv_map", [](std::vector<std::vector<int>> cycles) {
    return Psi_inv(CycleSystem::from_cycles(std::move(cycles))).word();
  });

  m.def("phi_map", [](const std::string& text) {
    return Phi(ClusterPerm::parse(text)).str();
  }, "cluster word text -> odd order cluster permutation text");
  m.def("phi_inv_map", [](const std::string& text) {
    return Phi_inv(Ocp::parse(text)).str();
  });

  m.def("count_class", [](const std::string& cls, int n, int h, int b) {
    return to_py(count_class(class_spec_from_name(cls, h, b), n));
  }, py::arg("cls"), py::arg("n"), py::arg("h") = 0, py::arg("b") = 0);

  m.def("avoid_count",
        [](const std::string& cls, int n, const std::string& pattern, int h, int b) {
          return to_py(avoid_count(class_spec_from_name(cls, h, b), n,
                                   Pattern::parse(pattern)));
        },
        py::arg("cls"), py::arg("n"), py::arg("pattern"), py::arg("h") = 0,
        py::arg("b") = 0);

  m.def("wilf_map", [](const std::string& which, const std::vector<int>& w) {
    const WilfMap wm = which == "varphi" ? WilfMap::Varphi213To312
                                         : WilfMap::Eta132To231;
    return wilf_map(wm, from_list(w)).word();
  });

  m.def("count_walks",
        [](const std::string& kind, int n, std::pair<int, int> start,
           std::pair<int, int> end, const std::string& method) {
          return to_py(count_walks(walk_kind(kind), n, {start.first, start.second},
                                   {end.first, end.second}, walk_method(method)));
        },
        py::arg("kind"), py::arg("n"), py::arg("start"), py::arg("end"),
        py::arg("method") = "step_dp");

  m.def("gessel_closed_form", [](int n) { return to_py(gessel_closed_form(n)); });

  m.def("ballot_recurrence", [](const std::string& id, int n, int h, int b) {
    return to_py(ballot_recurrence(recurrence_id_from_name(id), n, h, b));
  });

  m.def("count_cluster_cycles",
        [](int n, int k) { return to_py(count_cluster_cycles(n, k)); });
  m.def("count_wlpp_horizontal",
        [](int n, int k) { return to_py(count_wlpp_horizontal(n, k)); });

  m.def("egf_count", [](const std::string& kind, int n, int k) {
    const SeriesKind sk =
        kind == "b_egf" ? SeriesKind::BallotEgf : SeriesKind::OcpEgf;
    return to_py(series_coefficients(sk, n).count(n, k));
  }, "n! times the coefficient of t^k z^n");

  m.def("verify", [](const std::string& suite, int max_n, std::uint64_t seed) {
    const Report r = verify_suite(suite, max_n, seed);
    py::list checks;
    for (const Check& c : r.checks) {
      py::dict d;
      d["suite"] = c.suite;
      d["check"] = c.description;
      d["expected"] = c.expected;
      d["actual"] = c.actual;
      d["pass"] = c.pass;
      checks.append(d);
    }
    return checks;
  }, py::arg("suite") = "all", py::arg("max_n") = 5, py::arg("seed") = 1);
}
