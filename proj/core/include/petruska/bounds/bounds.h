#ifndef PETRUSKA_BOUNDS_BOUNDS_H_
#define PETRUSKA_BOUNDS_BOUNDS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace petruska::bounds {

// n(ω) = n(ω,1;3) and n*(ω) = n*(ω,1;2), for ω = 3..12.
struct Table1Row {
  int omega;
  int n;
  int n_star;
};
// Polygon construction parameters: ω = k - 1 + ceil(k/2), n* = 2k.
struct Table2Row {
  int k;
  int omega;
  int n_star;
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();
std::optional<Table1Row> table1_row(int omega);

// n*(ω,t;d-1) >= n*(ω,t-1;d-1) + 1 >= n(ω,t-1;d) + 1, with the terms that
// the tables know substituted (only t - 1 = 1 with d = 3 is tabulated).
struct InterconnectChain {
  int omega;
  int t;
  int d;
  std::string lhs;     // "n*(5,2;2)"
  std::string middle;  // "n*(5,1;2)"
  std::string rhs;     // "n(5,1;3)"
  std::optional<int> middle_value;
  std::optional<int> rhs_value;
  // Best lower bound on lhs implied by the known terms.
  std::optional<int> lower_bound;

  std::string to_string() const;
};

// Throws petruska::Error unless t >= 2, d >= 2 and omega >= 3.
InterconnectChain interconnect(int omega, int t, int d);

// (least L > k with (L - k)^2 >= k, 2k), i.e. (ceil(k + sqrt k), 2k).
// Throws petruska::Error for k < 2.
std::pair<int, int> petruska_bound_chain(int k);

// (ω, n) = (m(m+1)/2 + 1, ω + m). Throws petruska::Error for m < 1.
std::pair<int, int> sz_petruska_conjecture_value(int m);

struct TableCheck {
  std::string table;         // "table1" or "table2"
  int omega = 0;
  int k = 0;                 // polygon parameter when meaningful
  int expected_n_star = 0;
  std::string construction;  // e.g. "polygon(5)"
  int bodies = 0;
  bool omega_is_maximum = false;
  bool no_single_transversal = false;
  bool passed = false;
  std::string note;
};

struct CrossCheckReport {
  std::vector<TableCheck> rows;
  // Interconnection and n <= n* arithmetic on the n(ω) table.
  std::vector<std::string> arithmetic;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Witnesses every polygon-table row and every n*(ω) value with a verified
// construction and re-checks the tables' arithmetic.
CrossCheckReport cross_check_tables();

// Both tables as CSV text.
std::string tables_csv();

}  // namespace petruska::bounds

#endif  // PETRUSKA_BOUNDS_BOUNDS_H_
