#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deltamix/chaos.hpp"
#include "deltamix/cli.hpp"
#include "deltamix/density.hpp"
#include "deltamix/entropy.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/hitting.hpp"
#include "deltamix/independence.hpp"
#include "deltamix/mixing.hpp"
#include "deltamix/oracle.hpp"
#include "deltamix/serialize.hpp"
#include "deltamix/subshift.hpp"

namespace py = pybind11;
using namespace deltamix;

namespace {

std::vector<CylinderUnion> parse_sets(const std::vector<std::string>& texts) {
  std::vector<CylinderUnion> out;
  for (const std::string& t : texts) out.push_back(CylinderUnion::parse(t));
  return out;
}

py::dict timeset_dict(const TimeSet& t) {
  py::dict d;
  d["horizon"] = t.horizon;
  d["members"] = t.members;
  py::dict w;
  for (const auto& [n, word] : t.witnesses)
    w[py::int_(n)] = word.text();
  d["witnesses"] = w;
  return d;
}

py::dict certificate_dict(const IndependenceCertificate& cert) {
  py::dict d;
  std::vector<std::string> tuple;
  for (const CylinderUnion& u : cert.tuple) tuple.push_back(u.text());
  d["tuple"] = tuple;
  d["J"] = cert.J;
  py::list ws;
  for (const auto& [s, word] : cert.witnesses) {
    py::dict row;
    row["selector"] = s;
    row["word"] = word.text();
    ws.append(row);
  }
  d["witnesses"] = ws;
  return d;
}

}  // namespace

PYBIND11_MODULE(deltamix, m) {
  m.doc() = "finite certificates on subshifts of finite type";
  m.attr("__version__") = kToolVersion;

  py::register_exception<DomainError>(m, "DomainError");

  py::class_<SubshiftSpec>(m, "SubshiftSpec")
      .def_static("from_matrix", &SubshiftSpec::from_matrix, py::arg("alphabet_size"),
                  py::arg("rows"), py::arg("name") = "")
      .def_static(
          "from_forbidden_words",
          [](int k, const std::vector<std::string>& forbidden, std::string name) {
            std::vector<Word> words;
            for (const std::string& f : forbidden) words.push_back(Word::parse(f));
            return SubshiftSpec::from_forbidden_words(k, words, name);
          },
          py::arg("alphabet_size"), py::arg("forbidden"), py::arg("name") = "")
      .def_static("from_json", &parse_spec_json)
      .def("to_json", &spec_to_json_text)
      .def_property_readonly("name", &SubshiftSpec::name)
      .def_property_readonly("alphabet_size", &SubshiftSpec::alphabet_size)
      .def("word_allowed",
           [](const SubshiftSpec& s, const std::string& w) {
             return s.word_allowed(Word::parse(w));
           })
      .def("language",
           [](const SubshiftSpec& s, int n) {
             std::vector<std::string> out;
             for (const Word& w : s.language(n)) out.push_back(w.text());
             return out;
           })
      .def("validate", [](const SubshiftSpec& s) {
        ValidationReport rep = s.validate();
        py::dict d;
        d["alphabet_size"] = rep.alphabet_size;
        d["essential_input"] = rep.essential_input;
        d["irreducible"] = rep.irreducible;
        d["period"] = rep.period;
        d["state_count"] = rep.state_count;
        d["context_len"] = rep.context_len;
        return d;
      });

  m.def("sft_entropy", [](const SubshiftSpec& spec, double tol) {
    EntropyReport rep = sft_entropy(spec, tol);
    py::dict d;
    d["value"] = rep.value;
    d["residual"] = rep.residual;
    d["converged"] = rep.converged;
    return d;
  }, py::arg("spec"), py::arg("tol") = 1e-9);

  m.def("word_count_entropy", [](const SubshiftSpec& spec, int n_max) {
    EntropyReport rep = word_count_entropy(spec, n_max);
    py::dict d;
    d["value"] = rep.value;
    d["sequence"] = rep.sequence;
    return d;
  });

  m.def("hitting_set",
        [](const SubshiftSpec& spec, const std::string& u, const std::string& v,
           int horizon) {
          return timeset_dict(hitting_set(spec, CylinderUnion::parse(u),
                                          CylinderUnion::parse(v), horizon));
        });

  m.def("generalized_hitting_set",
        [](const SubshiftSpec& spec, const std::vector<std::string>& sets,
           int horizon) {
          return timeset_dict(
              generalized_hitting_set(spec, parse_sets(sets), horizon));
        });

  m.def("entering_time_set",
        [](const SubshiftSpec& spec, const std::string& point,
           const std::string& u, int horizon) {
          return timeset_dict(entering_time_set(spec, PointGen::parse(point),
                                                CylinderUnion::parse(u), horizon));
        });

  m.def("independence_check",
        [](const SubshiftSpec& spec, const std::vector<std::string>& sets,
           const std::vector<int>& J, long long cap) {
          auto res = independence_check(spec, parse_sets(sets), J, cap);
          py::dict d;
          d["ok"] = res.ok();
          if (res.ok()) d["certificate"] = certificate_dict(*res.certificate);
          else d["failing_selector"] = res.failure->selector;
          return d;
        },
        py::arg("spec"), py::arg("sets"), py::arg("J"), py::arg("cap") = 4096);

  m.def("independence_extend",
        [](const SubshiftSpec& spec, const std::vector<std::string>& sets,
           int horizon, int target, long long cap) {
          auto res = independence_extend(spec, parse_sets(sets), {}, horizon,
                                         target, cap);
          py::dict d;
          d["certificate"] = certificate_dict(res.certificate);
          d["density_value"] = res.density.value.value();
          return d;
        },
        py::arg("spec"), py::arg("sets"), py::arg("horizon"), py::arg("target"),
        py::arg("cap") = 4096);

  m.def("find_ap", [](const std::vector<int>& f, int d) {
    auto ap = find_ap(f, d);
    return ap ? py::object(py::make_tuple(ap->first, ap->second))
              : py::object(py::none());
  });

  m.def("delta_wm_certificate",
        [](const SubshiftSpec& spec, const std::string& a,
           const std::vector<std::string>& sets, int horizon) {
          DeltaCertificate cert = delta_wm_certificate(
              spec, CylinderUnion::parse(a), parse_sets(sets), horizon);
          py::dict d;
          d["n"] = cert.n;
          d["d"] = cert.d;
          d["certificate"] = certificate_dict(*cert.independence);
          return d;
        });

  m.def("a_m_membership",
        [](const SubshiftSpec& spec, const std::string& e, int m_scale,
           int horizon) {
          DeltaCertificate cert = a_m_membership(spec, CylinderUnion::parse(e),
                                                 m_scale, horizon);
          py::dict d;
          d["n"] = cert.n;
          d["k"] = cert.d;
          std::vector<std::string> cover;
          for (const Word& w : cert.cover) cover.push_back(w.text());
          d["cover"] = cover;
          return d;
        });

  m.def("construct_tree",
        [](const SubshiftSpec& spec, const std::vector<std::string>& seeds,
           int depth, int horizon) {
          std::vector<Word> words;
          for (const std::string& s : seeds) words.push_back(Word::parse(s));
          RunConfig config;
          config.horizon = horizon;
          ConstructionTree tree =
              theorem_b_construct(spec, words, depth, horizon, config);
          return write_tree(tree, config);
        });

  m.def("verify_tree", [](const std::string& text) {
    return verify_tree_text(text);
  });

  m.def("scrambled_report",
        [](const std::string& x, const std::string& y, int r, int s,
           int horizon, int window) {
          ScrambledThresholds th;
          ScrambledReport rep =
              scrambled_report(PointGen::parse(x), PointGen::parse(y), "pair",
                               r, s, horizon, window, th);
          py::dict d;
          d["min_tail"] = rep.min_tail.text();
          d["max_tail"] = rep.max_tail.text();
          d["verdict"] = verdict_name(rep.verdict);
          return d;
        },
        py::arg("x"), py::arg("y"), py::arg("r"), py::arg("s"),
        py::arg("horizon") = 512, py::arg("window") = 64);

  m.def("delta_transitive_point",
        [](int alphabet_size,
           const std::vector<std::pair<int, std::vector<std::string>>>& reqs,
           int budget) {
          std::vector<TransitivePointRequirement> rs;
          for (const auto& [d, words] : reqs) {
            TransitivePointRequirement r;
            r.d = d;
            for (const std::string& w : words) r.words.push_back(Word::parse(w));
            rs.push_back(std::move(r));
          }
          auto res = delta_transitive_point(alphabet_size, rs, budget);
          py::dict out;
          out["prefix"] = res.prefix.text();
          out["schedule"] = res.schedule;
          return out;
        });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
