#include "noc/tables.hpp"

#include <algorithm>

#include "noc/count.hpp"

namespace noc {

std::vector<FixedTableRow> fixed_length_table(unsigned q, unsigned n_min, unsigned n_max) {
  if (q < 2) throw std::invalid_argument("table requires q >= 2");
  std::vector<FixedTableRow> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    BigInt best_i = 0, best_i_prime = 0;
    for (unsigned k = 1; k <= n - 1; ++k) {
      best_i = std::max(best_i, s_count(1, q - 1, k, n));
      for (unsigned i_size = 1; i_size <= q - 1; ++i_size)
        best_i_prime = std::max(best_i_prime, s_count(i_size, q - i_size, k, n));
    }
    rows.push_back(FixedTableRow{n, std::move(best_i), std::move(best_i_prime)});
  }
  return rows;
}

std::vector<VariableTableCell> variable_length_table(unsigned q, unsigned n_min, unsigned n_max,
                                                     unsigned k_min, unsigned k_max) {
  if (q < 2) throw std::invalid_argument("table requires q >= 2");
  if (k_min < 3) throw std::invalid_argument("variable-length table requires k >= 3");
  std::vector<VariableTableCell> cells;
  for (unsigned n = n_min; n <= n_max; ++n) {
    for (unsigned k = k_min; k <= k_max; ++k) {
      if (n < 2 * k + 2) continue;
      BigInt best = 0;
      for (unsigned i_size = 1; i_size <= q - 1; ++i_size)
        best = std::max(best, vcal_count(i_size, q - i_size, k, n));
      cells.push_back(VariableTableCell{n, k, std::move(best)});
    }
  }
  return cells;
}

unsigned table_alphabet(unsigned table_id) {
  switch (table_id) {
    case 1: return 3;
    case 2: return 4;
    case 3: return 5;
    case 4: return 6;
    case 5: return 3;
    case 6: return 4;
    default: throw std::invalid_argument("table id must be 1..6");
  }
}

bool table_is_variable(unsigned table_id) {
  table_alphabet(table_id);
  return table_id >= 5;
}

}  // namespace noc
