#pragma once

#include <stdexcept>
#include <vector>

#include "lcq/rational.hpp"

namespace lcq {

/// A contiguous run of exactly-computed sequence terms.
/// terms[j] holds the value at index start + j.
struct SequenceWindow {
  long start = 0;
  std::vector<Rational> terms;

  long size() const { return static_cast<long>(terms.size()); }
  long first_index() const { return start; }
  long last_index() const { return start + size() - 1; }
  bool contains(long index) const { return index >= start && index <= last_index(); }

  const Rational& at(long index) const {
    if (!contains(index)) throw std::out_of_range("SequenceWindow: index outside window");
    return terms[static_cast<size_t>(index - start)];
  }
};

}  // namespace lcq
