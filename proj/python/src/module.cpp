#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pell/classifier.hpp"
#include "pell/identities.hpp"
#include "pell/matrices.hpp"
#include "pell/numtheory.hpp"
#include "pell/sequences.hpp"
#include "pell/zsqrt2.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpz_class <-> Python int, via decimal strings. Slow path, but exact and
// independent of GMP/CPython internals.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* s = PyObject_Str(src.ptr());
    if (!s) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(s);
    bool ok = false;
    if (text) {
      try {
        value = mpz_class(text, 10);
        ok = true;
      } catch (const std::invalid_argument&) {
      }
    } else {
      PyErr_Clear();
    }
    Py_DECREF(s);
    return ok;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using Grid = std::vector<std::vector<mpz_class>>;

pell::Mat3 to_mat(const Grid& g) {
  if (g.size() != 3) throw std::invalid_argument("expected a 3x3 matrix");
  pell::Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (g[static_cast<size_t>(i)].size() != 3)
      throw std::invalid_argument("expected a 3x3 matrix");
    for (int j = 0; j < 3; ++j)
      m.at(i, j) = g[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Grid from_mat(const pell::Mat3& m) {
  Grid g(3, std::vector<mpz_class>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
  return g;
}

pell::SequenceId parse_tag_or_throw(const std::string& tag) {
  auto id = pell::parse_sequence_tag(tag);
  if (!id) throw std::invalid_argument("unknown sequence tag: " + tag);
  return *id;
}

pell::Generator parse_generator(const std::string& name) {
  if (name == "u1") return pell::Generator::u1;
  if (name == "u1t" || name == "u1T") return pell::Generator::u1t;
  if (name == "u2") return pell::Generator::u2;
  if (name == "u3") return pell::Generator::u3;
  throw std::invalid_argument("unknown generator: " + name);
}

py::dict case_dict(const pell::IdentityCase& c) {
  py::dict d;
  d["code"] = std::string(c.code);
  d["n"] = c.n;
  d["m"] = c.m ? py::cast(*c.m) : py::object(py::none());
  d["k"] = c.k ? py::cast(*c.k) : py::object(py::none());
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["pass"] = c.pass;
  return d;
}

const char* similarity_name(pell::Similarity s) {
  switch (s) {
    case pell::Similarity::similar:
      return "similar";
    case pell::Similarity::not_similar:
      return "not_similar";
    default:
      return "indeterminate";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Pell-family sequences, ring arithmetic, matrices and checks";

  // ---- sequences ---------------------------------------------------------
  m.def(
      "term",
      [](const std::string& tag, long n) {
        return pell::term(parse_tag_or_throw(tag), n);
      },
      py::arg("tag"), py::arg("n"));
  m.def(
      "terms",
      [](const std::string& tag, long lo, long hi) {
        return pell::terms(parse_tag_or_throw(tag), lo, hi);
      },
      py::arg("tag"), py::arg("lo"), py::arg("hi"));
  m.def("partial_sum", &pell::partial_sum, py::arg("n"));
  m.def("sequence_tags", [] {
    using pell::SequenceId;
    std::vector<std::string> tags;
    for (SequenceId id : {SequenceId::E, SequenceId::Q, SequenceId::QHat,
                          SequenceId::B, SequenceId::R, SequenceId::A,
                          SequenceId::S, SequenceId::J})
      tags.push_back(std::string(pell::sequence_tag(id)));
    return tags;
  });
  m.def(
      "recurrence",
      [](const std::string& tag) {
        const pell::RecurrenceSpec& spec =
            pell::builtin_spec(parse_tag_or_throw(tag));
        py::dict d;
        d["order"] = spec.order;
        d["coeffs"] = spec.coeffs;
        d["constant"] = spec.constant;
        d["initials"] = spec.initials;
        d["base_index"] = spec.base_index;
        return d;
      },
      py::arg("tag"));

  // ---- Z[sqrt 2] ---------------------------------------------------------
  py::class_<pell::Zsqrt2>(m, "Zsqrt2")
      .def(py::init<>())
      .def(py::init([](const mpz_class& a, const mpz_class& b) {
             return pell::Zsqrt2{a, b};
           }),
           py::arg("a"), py::arg("b"))
      .def_readwrite("a", &pell::Zsqrt2::a)
      .def_readwrite("b", &pell::Zsqrt2::b)
      .def("__add__", [](const pell::Zsqrt2& x, const pell::Zsqrt2& y) { return x + y; })
      .def("__sub__", [](const pell::Zsqrt2& x, const pell::Zsqrt2& y) { return x - y; })
      .def("__mul__", [](const pell::Zsqrt2& x, const pell::Zsqrt2& y) { return x * y; })
      .def("__neg__", [](const pell::Zsqrt2& x) { return -x; })
      .def("__eq__", [](const pell::Zsqrt2& x, const pell::Zsqrt2& y) { return x == y; })
      .def("__pow__", [](const pell::Zsqrt2& x, long n) { return pell::pow(x, n); })
      .def("conj", [](const pell::Zsqrt2& x) { return conj(x); })
      .def("norm", [](const pell::Zsqrt2& x) { return norm(x); })
      .def("__repr__", [](const pell::Zsqrt2& x) {
        return "Zsqrt2(" + x.a.get_str() + ", " + x.b.get_str() + ")";
      });
  m.def("binet_check", &pell::binet_check, py::arg("n"));

  // ---- matrices ----------------------------------------------------------
  m.def(
      "generator",
      [](const std::string& name) {
        return from_mat(pell::generator(parse_generator(name)));
      },
      py::arg("name"));
  m.def(
      "mat_mul",
      [](const Grid& a, const Grid& b) { return from_mat(to_mat(a) * to_mat(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "mat_pow",
      [](const Grid& a, long n) { return from_mat(pell::mat_pow(to_mat(a), n)); },
      py::arg("a"), py::arg("n"));
  m.def(
      "det", [](const Grid& a) { return pell::det(to_mat(a)); }, py::arg("a"));
  m.def(
      "trace", [](const Grid& a) { return pell::trace(to_mat(a)); },
      py::arg("a"));
  m.def(
      "adjugate",
      [](const Grid& a) { return from_mat(pell::adjugate(to_mat(a))); },
      py::arg("a"));
  m.def(
      "char_poly",
      [](const Grid& a) {
        pell::CharPoly p = pell::char_poly(to_mat(a));
        return py::make_tuple(p.c2, p.c1, p.c0);
      },
      py::arg("a"));
  m.def(
      "char_poly_str",
      [](const Grid& a) {
        return pell::char_poly_string(pell::char_poly(to_mat(a)));
      },
      py::arg("a"));
  m.def(
      "closed_form",
      [](const std::string& name, long n) {
        pell::Mat3 out;
        if (name == "u1")
          out = pell::closed_form_u1(n);
        else if (name == "u1t" || name == "u1T")
          out = pell::closed_form_u1T(n);
        else if (name == "u2")
          out = pell::closed_form_u2(n);
        else if (name == "u2_inv")
          out = pell::closed_form_u2_inv(n);
        else if (name == "u3")
          out = pell::closed_form_u3(n);
        else if (name == "u3_inv")
          out = pell::closed_form_u3_inv(n);
        else
          throw std::invalid_argument("unknown closed form: " + name);
        return from_mat(out);
      },
      py::arg("name"), py::arg("n"));
  m.def(
      "similar_over_q",
      [](const Grid& a, const Grid& b) {
        return std::string(
            similarity_name(pell::similar_over_rationals(to_mat(a), to_mat(b))));
      },
      py::arg("a"), py::arg("b"));
  m.def("intro_check", &pell::intro_mat2_check, py::arg("n"));

  // ---- identities --------------------------------------------------------
  m.def("catalog", [] {
    std::vector<std::string> codes;
    for (auto code : pell::catalog()) codes.push_back(std::string(code));
    return codes;
  });
  m.def(
      "identity_info",
      [](const std::string& code) {
        const pell::IdentityInfo& info = pell::identity_info(code);
        py::dict d;
        d["code"] = std::string(info.code);
        d["arity"] = info.arity;
        d["n_min"] = info.n_min;
        d["m_min"] = info.m_min;
        d["formula"] = std::string(info.formula);
        d["family"] = std::string(info.family);
        d["alternating"] = info.alternating;
        return d;
      },
      py::arg("code"));
  m.def(
      "check",
      [](const std::string& code, long n, std::optional<long> mm,
         std::optional<long> k) {
        return case_dict(pell::check(code, n, mm, k));
      },
      py::arg("code"), py::arg("n"), py::arg("m") = std::nullopt,
      py::arg("k") = std::nullopt);
  m.def(
      "check_range",
      [](const std::string& code, long n_max, std::optional<long> m_max) {
        pell::IdentityReport rep = pell::check_range(code, n_max, m_max);
        py::dict d;
        d["code"] = std::string(rep.code);
        d["n_max"] = rep.n_max;
        d["m_max"] = rep.m_max ? py::cast(*rep.m_max) : py::object(py::none());
        d["checked"] = rep.checked;
        py::list fails;
        for (const auto& f : rep.failures) fails.append(case_dict(f));
        d["failures"] = fails;
        return d;
      },
      py::arg("code"), py::arg("n_max"), py::arg("m_max") = std::nullopt);
  m.def("flip_guard", &pell::flip_guard, py::arg("code"),
        py::arg("n_limit") = 10);

  // ---- number theory -----------------------------------------------------
  m.def("congruence_mod4", &pell::congruence_mod4, py::arg("m"));
  m.def("double_index_check", &pell::double_index_check, py::arg("n"));
  m.def("gcd_consecutive", &pell::gcd_consecutive, py::arg("n"));
  m.def("partial_sum_bound", &pell::partial_sum_bound, py::arg("n_max"));
  m.def(
      "sidon_check",
      [](long n_max) {
        pell::SidonReport rep = pell::sidon_check(n_max);
        py::dict d;
        d["n_max"] = rep.n_max;
        d["pair_count"] = rep.pair_count;
        d["distinct"] = rep.distinct;
        if (rep.first_collision) {
          const auto& c = *rep.first_collision;
          py::dict col;
          col["i"] = c.i;
          col["j"] = c.j;
          col["p"] = c.p;
          col["q"] = c.q;
          d["first_collision"] = col;
        } else {
          d["first_collision"] = py::none();
        }
        return d;
      },
      py::arg("n_max"));

  // ---- classifier --------------------------------------------------------
  m.def(
      "binary_matrix",
      [](int index) { return from_mat(pell::binary_matrix(index)); },
      py::arg("index"));
  m.def(
      "binary_index", [](const Grid& a) { return pell::binary_index(to_mat(a)); },
      py::arg("a"));
  m.def(
      "is_pell_generating",
      [](const Grid& a) { return pell::is_pell_generating(to_mat(a)); },
      py::arg("a"));
  m.def(
      "trace_identity_check",
      [](const Grid& a, long n_max) {
        return pell::trace_identity_check(to_mat(a), n_max);
      },
      py::arg("a"), py::arg("n_max") = 20);
  m.def("classify", [] {
    pell::ClassificationReport rep = pell::classify();
    py::dict d;
    d["total"] = rep.total;
    d["pell_count"] = rep.pell_count;
    py::list buckets;
    for (const pell::Bucket& bk : rep.buckets) {
      py::dict jb;
      jb["char_poly"] = pell::char_poly_string(bk.poly);
      jb["coeffs"] = py::make_tuple(bk.poly.c2, bk.poly.c1, bk.poly.c0);
      jb["indices"] = bk.indices;
      jb["orbits"] = bk.orbits;
      buckets.append(jb);
    }
    d["buckets"] = buckets;
    d["u1_index"] = rep.u1_index;
    d["u2_index"] = rep.u2_index;
    d["u3_index"] = rep.u3_index;
    d["u1_bucket"] = rep.u1_bucket;
    d["u2_bucket"] = rep.u2_bucket;
    d["u3_bucket"] = rep.u3_bucket;
    d["invariants_ok"] = pell::classification_invariants_ok(rep);
    return d;
  });
}
