#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nmds/errors.hpp"
#include "nmds/serialize.hpp"

namespace py = pybind11;
using namespace nmds;

namespace {

// Reports cross the boundary as the same JSON the CLI prints, decoded by the
// json module, so Python sees exactly the documented schema.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FamilySpec make_spec(const std::string& family, int m, std::optional<int> h,
                     std::vector<int> exponents, bool extended) {
  FamilySpec s{parse_family(family), m, h, std::move(exponents), extended};
  s.validate();
  return s;
}

ExhaustivePolicy policy(const std::string& s) {
  if (s == "auto") return ExhaustivePolicy::Auto;
  if (s == "never") return ExhaustivePolicy::Never;
  if (s == "always") return ExhaustivePolicy::Always;
  throw PreconditionError("exhaustive must be 'auto', 'never' or 'always'");
}

Budget budget(unsigned workers) {
  Budget b = Budget::from_environment();
  b.workers = workers;
  return b;
}

py::dict distribution_dict(const WeightDistribution& wd) {
  py::dict d;
  py::object int_ = py::module_::import("builtins").attr("int");
  for (std::size_t i = 0; i < wd.counts.size(); ++i)
    if (wd.counts[i] != 0) d[py::int_(i)] = int_(to_string(wd.counts[i]));
  return d;
}

}  // namespace

PYBIND11_MODULE(nmdscodes, mod) {
  mod.doc() = "NMDS code families over GF(2^m): construction and verification";

  py::register_exception<PreconditionError>(mod, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(mod, "InconsistencyError", PyExc_AssertionError);

  mod.def("field", [](int m, std::optional<std::uint32_t> modulus) {
        return to_python(field_summary(*make_field(m, modulus)));
      },
      py::arg("m"), py::arg("modulus") = py::none(), "Modulus, primitive element and exp table.");

  mod.def("generator",
          [](const std::string& family, int m, std::optional<int> h, std::vector<int> exponents,
             bool extended) {
            const auto spec = make_spec(family, m, h, std::move(exponents), extended);
            return to_python(to_json(build_family(spec, make_field(m)).generator()));
          },
          py::arg("family"), py::arg("m"), py::arg("h") = py::none(),
          py::arg("exponents") = std::vector<int>{}, py::arg("extended") = false);

  mod.def("verify",
          [](const std::string& family, int m, std::optional<int> h, std::vector<int> exponents,
             bool extended, const std::string& exhaustive, unsigned workers) {
            const auto spec = make_spec(family, m, h, std::move(exponents), extended);
            const auto b = budget(workers);
            VerificationReport r;
            {
              py::gil_scoped_release release;
              r = verify_family(spec, make_field(m), b, policy(exhaustive));
            }
            return to_python(to_json(r));
          },
          py::arg("family"), py::arg("m"), py::arg("h") = py::none(),
          py::arg("exponents") = std::vector<int>{}, py::arg("extended") = false,
          py::arg("exhaustive") = "auto", py::arg("workers") = 0u,
          "Full verification report (parameters, enumerator, designs, checks).");

  mod.def("weight_distribution",
          [](const std::vector<std::vector<Element>>& rows, int m,
             std::optional<std::uint32_t> modulus, unsigned workers) {
            const auto code = LinearCode::from_generator(Matrix::from_rows(make_field(m, modulus), rows));
            const auto b = budget(workers);
            WeightDistribution wd;
            {
              py::gil_scoped_release release;
              wd = weight_distribution_exhaustive(code, b);
            }
            return distribution_dict(wd);
          },
          py::arg("rows"), py::arg("m"), py::arg("modulus") = py::none(), py::arg("workers") = 0u,
          "Exhaustive weight distribution {weight: count} of the code spanned by rows.");

  mod.def("macwilliams",
          [](const py::dict& counts, std::size_t n, std::size_t k, std::uint32_t q) {
            auto wd = WeightDistribution::zero(n, k, q);
            for (auto [w, a] : counts) {
              const auto i = w.cast<std::size_t>();
              if (i > n) throw PreconditionError("weight out of range");
              wd.counts[i] = BigInt(py::str(a).cast<std::string>());
            }
            return distribution_dict(macwilliams_transform(wd));
          },
          py::arg("counts"), py::arg("n"), py::arg("k"), py::arg("q"));

  mod.def("t_design",
          [](std::size_t n, std::size_t w, const std::vector<std::vector<std::uint32_t>>& blocks,
             std::size_t t) {
            std::vector<Block> zero_based;
            for (const auto& b : blocks) {
              Block z;
              for (auto p : b) {
                if (p == 0) throw PreconditionError("block indices are 1-based");
                z.push_back(p - 1);
              }
              std::sort(z.begin(), z.end());
              zero_based.push_back(std::move(z));
            }
            return to_python(to_json(verify_t_design(Design::from_blocks(n, w, zero_based), t)));
          },
          py::arg("n"), py::arg("w"), py::arg("blocks"), py::arg("t"),
          "Checks a block multiset (1-based points) for the t-design property.");

  mod.def("lemma",
          [](const std::string& id, std::optional<int> m, int m_lo, int m_hi, int h_lo, int h_hi,
             unsigned workers) {
            const std::string canon = canonical_lemma_id(id);
            const auto counting = counting_lemma_ids();
            LemmaReport r;
            py::gil_scoped_release release;
            if (std::find(counting.begin(), counting.end(), canon) != counting.end()) {
              if (!m) throw PreconditionError(canon + " needs m");
              r = verify_counting_lemma(canon, make_field(*m), budget(workers).worker_count());
            } else {
              r = m ? verify_field_lemma(canon, *m, *m, h_lo, h_hi)
                    : verify_field_lemma(canon, m_lo, m_hi, h_lo, h_hi);
            }
            py::gil_scoped_acquire acquire;
            return to_python(to_json(r));
          },
          py::arg("id"), py::arg("m") = py::none(), py::arg("m_lo") = 2, py::arg("m_hi") = 6,
          py::arg("h_lo") = 1, py::arg("h_hi") = 8, py::arg("workers") = 0u);

  mod.def("lemma_ids", [] {
    auto ids = counting_lemma_ids();
    const auto f = field_lemma_ids();
    ids.insert(ids.end(), f.begin(), f.end());
    return ids;
  });

  mod.def("conjecture",
          [](int m, int k) {
            LemmaReport r;
            {
              py::gil_scoped_release release;
              r = verify_conjecture(m, k, budget(0));
            }
            return to_python(to_json(r));
          },
          py::arg("m"), py::arg("k"));

  mod.def("lrc_table",
          [](int m_lo, int m_hi) { return to_python(to_json(lrc_table_report(m_lo, m_hi, budget(0)))); },
          py::arg("m_lo") = 3, py::arg("m_hi") = 5);

  mod.def("lrc_csv",
          [](int m_lo, int m_hi) { return lrc_csv(lrc_table_report(m_lo, m_hi, budget(0))); },
          py::arg("m_lo") = 3, py::arg("m_hi") = 5);
}
