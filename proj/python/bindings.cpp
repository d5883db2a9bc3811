#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "permdist/code.hpp"
#include "permdist/constructions.hpp"
#include "permdist/error.hpp"
#include "permdist/evolve.hpp"
#include "permdist/matrix_file.hpp"

namespace py = pybind11;
using namespace permdist;

namespace {

using Rows = std::vector<std::vector<Element>>;

Rows to_rows(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

Permutation to_permutation(const std::vector<Permutation::Index>& images) { return Permutation(images); }

py::dict fitness_dict(const FitnessResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["row"] = r.row;
  d["witness"] = r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite fields, linear codes and permutation-encoded genetic search for minimum-distance bounds";

  // Translators run newest first, so the subclass is registered last.
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned deg, std::optional<Coefficients> modulus) {
             return std::make_shared<Field>(p, deg, std::move(modulus));
           }),
           py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("div", &Field::div)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("to_coefficients", &Field::to_coefficients)
      .def("from_coefficients", &Field::from_coefficients)
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.characteristic()) + ", m=" + std::to_string(f.degree()) + ")";
      });

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init([](const std::shared_ptr<Field>& field, const Rows& rows) {
             return LinearCode(Matrix::from_rows(field, rows));
           }),
           py::arg("field"), py::arg("rows"))
      .def_property_readonly("length", &LinearCode::length)
      .def_property_readonly("dimension", &LinearCode::dimension)
      .def_property_readonly("field_order", &LinearCode::field_order)
      .def_property_readonly("generator", [](const LinearCode& c) { return to_rows(c.generator()); })
      .def_property_readonly("reduced", [](const LinearCode& c) { return to_rows(c.reduced().reduced); })
      .def("contains", [](const LinearCode& c, const std::vector<Element>& w) { return c.contains(w); })
      .def("__repr__", [](const LinearCode& c) {
        return "LinearCode([" + std::to_string(c.length()) + ", " + std::to_string(c.dimension()) + "]_" +
               std::to_string(c.field_order()) + ")";
      });

  m.def(
      "fitness", [](const LinearCode& c, const std::vector<Permutation::Index>& p) {
        return fitness_dict(fitness(c, to_permutation(p)));
      },
      py::arg("code"), py::arg("permutation"));
  m.def("exact_distance", &exact_distance, py::arg("code"), py::arg("budget") = kDefaultCodewordBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("min_fitness_exhaustive", &min_fitness_exhaustive, py::arg("code"),
        py::arg("budget") = kDefaultPermutationBudget, py::call_guard<py::gil_scoped_release>());
  m.def(
      "random_search",
      [](const LinearCode& c, std::uint64_t count, std::uint64_t seed) {
        Rng rng(seed);
        FitnessResult r;
        {
          py::gil_scoped_release release;
          r = random_search(c, count, rng);
        }
        return fitness_dict(r);
      },
      py::arg("code"), py::arg("count"), py::arg("seed") = 0);

  m.def(
      "run_ga",
      [](const LinearCode& c, std::size_t population, std::size_t arity, double pc, double pm,
         std::optional<std::uint64_t> generations, std::optional<double> time_budget, std::uint64_t seed,
         std::optional<std::size_t> target) {
        GaConfig cfg;
        cfg.population_size = population;
        cfg.arity = arity;
        cfg.crossover_probability = pc;
        cfg.mutation_probability = pm;
        cfg.max_generations = generations;
        cfg.time_budget_seconds = time_budget;
        cfg.seed = seed;
        cfg.target = target;
        RunStats s;
        {
          py::gil_scoped_release release;
          s = run(c, cfg);
        }
        py::dict d;
        d["bound"] = s.best_value;
        d["witness"] = s.best_witness;
        d["permutation"] = s.best_permutation.images();
        d["generation_of_best"] = s.generation_of_best;
        d["generations"] = s.generations_run;
        d["evaluations"] = s.fitness_evaluations;
        d["wall_time"] = s.wall_time_seconds;
        d["best_history"] = s.best_history;
        return d;
      },
      py::arg("code"), py::arg("population") = 5, py::arg("arity") = 2, py::arg("pc") = 0.7, py::arg("pm") = 1.0,
      py::arg("generations") = std::optional<std::uint64_t>(1000), py::arg("time_budget") = std::nullopt,
      py::arg("seed") = 0, py::arg("target") = std::nullopt);

  m.def("qr_code", &qr_code, py::arg("p"));
  m.def("example_code_gf8", &example_code_gf8);
  m.def(
      "repetition_code", [](const std::shared_ptr<Field>& f, std::size_t n) { return repetition_code(f, n); },
      py::arg("field"), py::arg("n"));
  m.def(
      "parse_code", [](const std::string& text) { return parse_code_file(text); }, py::arg("text"));
  m.def(
      "emit_code", [](const LinearCode& c) { return emit_matrix_file(c.generator()); }, py::arg("code"));
  m.def("read_code_file", &read_code_file, py::arg("path"));
}
