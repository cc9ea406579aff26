// Python bindings for the fair matching game solver. GMP integers cross the
// boundary as native Python ints (exact, arbitrary precision) and rationals
// as fractions.Fraction, so no caller ever sees a truncated coordinate.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fairgame/binary.hpp"
#include "fairgame/games.hpp"
#include "fairgame/ternary.hpp"
#include "fairgame/tree.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (text == nullptr) return false;
    const char* digits = PyUnicode_AsUTF8(text);
    if (digits == nullptr) {
      Py_DECREF(text);
      return false;
    }
    value = mpz_class(digits);
    Py_DECREF(text);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  // Accepts anything with integer .numerator/.denominator (int, Fraction).
  bool load(handle src, bool) {
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator"))
      return false;
    const std::string num = str(src.attr("numerator"));
    const std::string den = str(src.attr("denominator"));
    value = mpq_class(num + "/" + den);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    object result =
        fraction(v.get_num().get_str() + "/" + v.get_den().get_str());
    return result.release();
  }
};

}  // namespace pybind11::detail

namespace {

using fairgame::Integer;
using fairgame::SolutionVector;

std::string coords_repr(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].get_str();
  }
  out += ")";
  return out;
}

// Exactly one bound keyword selects the enumeration cutoff.
fairgame::EnumerationBound make_bound(const std::optional<Integer>& max_depth,
                                      const std::optional<Integer>& max_height,
                                      const std::optional<Integer>& max_norm) {
  const int given = int(max_depth.has_value()) + int(max_height.has_value()) +
                    int(max_norm.has_value());
  if (given != 1)
    throw std::invalid_argument(
        "exactly one of max_depth, max_height, max_norm is required");
  fairgame::EnumerationBound bound;
  if (max_depth) {
    bound.kind = fairgame::BoundKind::max_depth;
    bound.limit = *max_depth;
  } else if (max_height) {
    bound.kind = fairgame::BoundKind::max_height;
    bound.limit = *max_height;
  } else {
    bound.kind = fairgame::BoundKind::max_norm;
    bound.limit = *max_norm;
  }
  return bound;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Fair matching games: solution trees of the game equation, ternary "
      "parametrization, Lorentz quadric counts, and exact simulation.";

  py::class_<SolutionVector>(m, "SolutionVector")
      .def(py::init<std::vector<Integer>>(), py::arg("coords"),
           "Sorts the coordinates and verifies they solve the game equation.")
      .def_property_readonly("coords", &SolutionVector::coords)
      .def_property_readonly("sum", &SolutionVector::sum)
      .def_property_readonly("norm_sq", &SolutionVector::norm_sq)
      .def_property_readonly("height", &SolutionVector::height)
      .def_property_readonly("fair", &SolutionVector::fair)
      .def("__len__", &SolutionVector::size)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const SolutionVector& x) {
             return py::hash(py::tuple(py::cast(x.coords())));
           })
      .def("__repr__", [](const SolutionVector& x) {
        return "SolutionVector" + coords_repr(x.coords());
      });

  m.def("eval_fair_poly", &fairgame::eval_fair_poly, py::arg("x"),
        "F_n(x) = s^2 - s - 4p; zero exactly on solutions.");
  m.def("is_fair_game", &fairgame::is_fair_game, py::arg("x"));
  m.def("win_probability", &fairgame::win_probability, py::arg("bag"),
        "Exact probability that two drawn balls match.");
  m.def(
      "simulate_game",
      [](const std::vector<Integer>& bag, std::uint64_t trials,
         std::uint64_t seed) {
        const auto r = fairgame::simulate_game(bag, trials, seed);
        return py::make_tuple(r.trials, r.wins, py::cast(r.rate));
      },
      py::arg("bag"), py::arg("trials"), py::arg("seed") = 1,
      "Reproducible Monte-Carlo match rate: (trials, wins, exact rate).");
  m.def("sign_of",
        [](const SolutionVector& x) {
          return fairgame::to_string(fairgame::sign_of(x));
        });
  m.def("neighbor", &fairgame::neighbor, py::arg("x"), py::arg("k"),
        "Vieta move on coordinate k of the ascending tuple.");
  m.def("extend_game", &fairgame::extend_game, py::arg("fair_game"),
        "The two fair (n+1)-games over a fair n-game: append 0 or 1+2s.");

  py::class_<fairgame::RootWitness>(m, "RootWitness")
      .def_readonly("a", &fairgame::RootWitness::a)
      .def_readonly("m", &fairgame::RootWitness::m)
      .def_readonly("b", &fairgame::RootWitness::b)
      .def_readonly("c", &fairgame::RootWitness::c);

  py::class_<fairgame::RootRecord>(m, "RootRecord")
      .def_readonly("root", &fairgame::RootRecord::root)
      .def_readonly("witness", &fairgame::RootRecord::witness)
      .def("__repr__", [](const fairgame::RootRecord& r) {
        return "RootRecord" + coords_repr(r.root.coords());
      });

  m.def("neighbors_of", &fairgame::neighbors_of, py::arg("x"));
  m.def("parent", &fairgame::parent, py::arg("x"),
        "The unique lower neighbor, or None at a root.");
  m.def("children", &fairgame::children, py::arg("x"));
  m.def("is_root", &fairgame::is_root, py::arg("x"));
  m.def("r_plus", &fairgame::r_plus, py::arg("a"));
  m.def("r_minus", &fairgame::r_minus, py::arg("a"));
  m.def("find_roots_extending", &fairgame::find_roots_extending, py::arg("a"),
        "Every component root whose coordinates extend the tuple a.");
  m.def("first_fair_in_component", &fairgame::first_fair_in_component,
        py::arg("root"));
  m.def("mod3_class", [](const SolutionVector& x) {
    return fairgame::to_string(fairgame::mod3_class(x));
  });
  m.def(
      "enumerate_component",
      [](const SolutionVector& root, const std::optional<Integer>& max_depth,
         const std::optional<Integer>& max_height,
         const std::optional<Integer>& max_norm, int jobs) {
        std::vector<std::pair<SolutionVector, long>> out;
        fairgame::enumerate_component(
            root, make_bound(max_depth, max_height, max_norm),
            [&](const SolutionVector& x, long depth) {
              out.emplace_back(x, depth);
            },
            jobs);
        return out;
      },
      py::arg("root"), py::kw_only(), py::arg("max_depth") = std::nullopt,
      py::arg("max_height") = std::nullopt,
      py::arg("max_norm") = std::nullopt, py::arg("jobs") = 1,
      "Breadth-first (vertex, depth) pairs within exactly one bound.");

  py::class_<fairgame::TernaryGame>(m, "TernaryGame")
      .def(py::init<std::array<Integer, 3>>(), py::arg("triple"))
      .def_readonly("triple", &fairgame::TernaryGame::triple)
      .def_readonly("depth", &fairgame::TernaryGame::depth)
      .def("trivial", &fairgame::TernaryGame::trivial)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", [](const fairgame::TernaryGame& g) {
        return "TernaryGame" +
               coords_repr({g.triple[0], g.triple[1], g.triple[2]});
      });

  m.def("c3_contains", &fairgame::c3_contains, py::arg("c"),
        "Whether some fair triple has maximum coordinate c "
        "(factorization path).");
  m.def("c3_contains_residue", &fairgame::c3_contains_residue, py::arg("c"),
        "Same membership via the quadratic-residue path.");
  m.def("games_with_coordinate", &fairgame::games_with_coordinate,
        py::arg("c"), py::arg("u_lo"), py::arg("u_hi"));
  m.def("games_with_max_coordinate", &fairgame::games_with_max_coordinate,
        py::arg("c"));
  m.def("count_max_coordinate", &fairgame::count_max_coordinate, py::arg("c"),
        "2^(m-1) fair triples share the maximum coordinate c.");
  m.def("c3_list", &fairgame::c3_list, py::arg("limit"));
  m.def("c3_density", &fairgame::c3_density, py::arg("limit"));
  m.def("ternary_left_child", &fairgame::left_child, py::arg("game"));
  m.def("ternary_right_child", &fairgame::right_child, py::arg("game"));
  m.def("ternary_parent", &fairgame::tree_parent, py::arg("game"));
  m.def("min_norm_node", &fairgame::min_norm_node, py::arg("k"));
  m.def("max_norm_node", &fairgame::max_norm_node, py::arg("k"));
  m.def("m_sequence", &fairgame::m_sequence, py::arg("k"),
        "Coordinates of the maximal-norm path: f_k^2 - [k even].");

  py::class_<fairgame::LorentzPoint>(m, "LorentzPoint")
      .def(py::init<Integer, Integer, Integer>(), py::arg("w1"),
           py::arg("w2"), py::arg("w3"))
      .def_readonly("w1", &fairgame::LorentzPoint::w1)
      .def_readonly("w2", &fairgame::LorentzPoint::w2)
      .def_readonly("w3", &fairgame::LorentzPoint::w3)
      .def("__repr__", [](const fairgame::LorentzPoint& p) {
        return "LorentzPoint" + coords_repr({p.w1, p.w2, p.w3});
      });

  m.def("to_lorentz", &fairgame::to_lorentz, py::arg("x"),
        "Image of an ascending solution triple on the quadric Q(w) = -3.");
  m.def("from_lorentz", &fairgame::from_lorentz, py::arg("w"),
        "The ordered solution triple mapping to w; rejects even w2.");
  m.def("count_lorentz", &fairgame::count_lorentz, py::arg("k"),
        "Quadric points with Euclidean norm at most k.");
  m.def("count_s3_ellipsoid", &fairgame::count_s3_ellipsoid, py::arg("k"),
        "Quadric points with odd w2: images of ordered solutions.");
  m.def("count_f3_ellipsoid", &fairgame::count_f3_ellipsoid, py::arg("k"),
        "Sign-constrained classes: odd w2 with w1, w2 <= 0 <= w3.");

  py::class_<fairgame::BinaryGame>(m, "BinaryGame")
      .def_readonly("index", &fairgame::BinaryGame::index)
      .def_readonly("pair", &fairgame::BinaryGame::pair)
      .def("__repr__", [](const fairgame::BinaryGame& g) {
        return "BinaryGame" + coords_repr({g.pair[0], g.pair[1]});
      });

  m.def("binary_game", &fairgame::binary_game, py::arg("m"),
        "The m-th fair pair (C(m,2), C(m+1,2)).");
  m.def("count_f2", &fairgame::count_f2, py::arg("k"),
        "Closed-form count of fair pairs with norm at most k.");
  m.def("count_c2", &fairgame::count_c2, py::arg("k"),
        "Closed-form count of realizable pair maxima in [1, k].");
  m.def("count_f2_oracle", &fairgame::count_f2_oracle, py::arg("k"));
  m.def("count_c2_oracle", &fairgame::count_c2_oracle, py::arg("k"));
}
