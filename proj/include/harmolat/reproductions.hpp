#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace harmolat {

/// One assertion made while reproducing an example. Informational entries are
/// reported but never fail the run.
struct ExampleCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double reference = 0.0;
  std::string detail;
  bool informational = false;
};

struct ExampleReport {
  int example = 0;
  std::string title;
  std::vector<ExampleCheck> checks;

  bool passed() const;
};

struct ExampleOptions {
  std::uint64_t seed = 1;  // first seed of the example-1 sweep
  int seeds = 5;           // example 1
  int n = 0;               // ring length override, 0 keeps each example's default
};

/// Reproduces the four worked examples (1: disordered chain, 2: rotating-wave
/// thermal states, 3: gap from exponential decay, 4: algebraic decay).
/// Throws std::invalid_argument for other numbers.
ExampleReport run_example(int number, const ExampleOptions& options = {});

/// ((1+q^2) / ((q^n - 1)(q^2 - 1))) (q^{n-r} + q^r) with q = (1 - sqrt(1 - 4c^2)) / (2c):
/// entry at cyclic offset r of (I - cE)^-1 on ring(n).
double circulant_inverse_entry(int n, double c, int r);

}  // namespace harmolat
