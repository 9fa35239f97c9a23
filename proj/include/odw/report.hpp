#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace odw {

/// One counterexample: the offending term tuple plus what was expected and
/// what actually happened, all in printed form.
struct Witness {
  std::vector<std::string> terms;
  std::string expected;
  std::string actual;
};

/// Outcome of a property suite.  Witnesses are collected in scan order over
/// ascending term spaces, so the first one is a minimal counterexample; at
/// most kMaxWitnesses are kept while witness_total counts every failure.
/// Invariant: pass == (witness_total == 0).
struct PropertyReport {
  static constexpr std::size_t kMaxWitnesses = 10;

  std::string suite;
  std::size_t checked = 0;
  bool pass = true;
  std::size_t witness_total = 0;
  std::vector<Witness> witnesses;

  void add_witness(std::vector<std::string> terms, std::string expected,
                   std::string actual) {
    pass = false;
    ++witness_total;
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back(
          {std::move(terms), std::move(expected), std::move(actual)});
    }
  }
};

}  // namespace odw
