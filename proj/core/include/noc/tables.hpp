#pragma once

#include <vector>

#include "noc/types.hpp"

namespace noc {

// Reference tables of largest construction sizes, computed from the
// closed-form counters (no enumeration).

struct FixedTableRow {
  unsigned n;
  BigInt construction_i;        // max over k of |S_q^(k)(n)|
  BigInt construction_i_prime;  // max over k and class sizes of |S^(k)(n)|
};

/// Rows n = n_min..n_max for alphabet size q.
std::vector<FixedTableRow> fixed_length_table(unsigned q, unsigned n_min = 3, unsigned n_max = 16);

struct VariableTableCell {
  unsigned n;
  unsigned k;
  BigInt cardinality;  // max over class sizes of the cumulative size
};

/// Cells (n, k) with n = n_min..n_max, k = k_min..k_max and n >= 2k+2,
/// in row-major order.
std::vector<VariableTableCell> variable_length_table(unsigned q, unsigned n_min = 8,
                                                     unsigned n_max = 23, unsigned k_min = 3,
                                                     unsigned k_max = 10);

/// Alphabet size behind a published table id: 1..4 are the fixed-length
/// tables for q = 3..6, 5..6 the variable-length tables for q = 3..4.
unsigned table_alphabet(unsigned table_id);
bool table_is_variable(unsigned table_id);

}  // namespace noc
