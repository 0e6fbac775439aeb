#include "petruska/bounds/bounds.h"

#include <functional>
#include <sstream>

#include "petruska/constructions/constructions.h"
#include "petruska/constructions/verify.h"
#include "petruska/error.h"

namespace petruska::bounds {

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {3, 5, 5},   {4, 6, 6},   {5, 8, 8},   {6, 9, 9},   {7, 10, 10},
      {8, 12, 12}, {9, 13, 13}, {10, 14, 14}, {11, 15, 16}, {12, 17, 17},
  };
  return rows;
}

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {3, 4, 6}, {4, 5, 8}, {5, 7, 10}, {6, 8, 12}, {7, 10, 14}, {8, 11, 16},
  };
  return rows;
}

std::optional<Table1Row> table1_row(int omega) {
  for (const Table1Row& r : table1()) {
    if (r.omega == omega) return r;
  }
  return std::nullopt;
}

std::string InterconnectChain::to_string() const {
  auto term = [](const std::string& name, const std::optional<int>& v) {
    return v ? name + "=" + std::to_string(*v) : name;
  };
  std::string s = lhs + " >= " + term(middle, middle_value) + "+1 >= " +
                  term(rhs, rhs_value) + "+1";
  if (lower_bound) s += ", so " + lhs + " >= " + std::to_string(*lower_bound);
  return s;
}

InterconnectChain interconnect(int omega, int t, int d) {
  if (t < 2 || d < 2) throw Error("interconnection needs t ≥ 2 and d ≥ 2");
  if (omega < 3) throw Error("omega must be at least 3");
  auto name = [](const char* f, int w, int tt, int dd) {
    return std::string(f) + "(" + std::to_string(w) + "," + std::to_string(tt) +
           ";" + std::to_string(dd) + ")";
  };
  InterconnectChain c{omega, t, d,
                      name("n*", omega, t, d - 1),
                      name("n*", omega, t - 1, d - 1),
                      name("n", omega, t - 1, d),
                      std::nullopt, std::nullopt, std::nullopt};
  if (t - 1 == 1 && d == 3) {
    if (auto row = table1_row(omega)) {
      c.middle_value = row->n_star;
      c.rhs_value = row->n;
    }
  }
  if (c.rhs_value) c.lower_bound = *c.rhs_value + 1;
  if (c.middle_value) {
    c.lower_bound = std::max(c.lower_bound.value_or(0), *c.middle_value + 1);
  }
  return c;
}

std::pair<int, int> petruska_bound_chain(int k) {
  if (k < 2) throw Error("bound chain needs k ≥ 2");
  int lower = k + 1;
  while (static_cast<long>(lower - k) * (lower - k) < k) ++lower;
  return {lower, 2 * k};
}

std::pair<int, int> sz_petruska_conjecture_value(int m) {
  if (m < 1) throw Error("m must be at least 1");
  const int omega = m * (m + 1) / 2 + 1;
  return {omega, omega + m};
}

namespace {

TableCheck witness(const std::string& table, int omega, int k, int expected,
                   const std::string& label,
                   const std::function<constructions::ConvexFamily()>& build) {
  TableCheck row;
  row.table = table;
  row.omega = omega;
  row.k = k;
  row.expected_n_star = expected;
  row.construction = label;
  const constructions::ConvexFamily family = build();
  row.bodies = static_cast<int>(family.size());
  try {
    row.no_single_transversal = constructions::verify_no_single_transversal(family, omega);
    row.omega_is_maximum = true;
  } catch (const Error& e) {
    row.note = e.what();
  }
  row.passed = row.omega_is_maximum && row.no_single_transversal && row.bodies == expected;
  return row;
}

}  // namespace

CrossCheckReport cross_check_tables() {
  using namespace constructions;
  CrossCheckReport report;
  for (const Table2Row& r : table2()) {
    if (r.omega != r.k - 1 + (r.k + 1) / 2) {
      report.mismatches.push_back("table2 k=" + std::to_string(r.k) + " omega formula");
    }
    report.rows.push_back(witness("table2", r.omega, r.k, r.n_star,
                                  "polygon(" + std::to_string(r.k) + ")",
                                  [k = r.k] { return polygon_construction(k); }));
  }
  for (const Table1Row& r : table1()) {
    TableCheck row;
    if (r.omega == 3 || r.omega == 6) {
      row = witness("table1", r.omega, 0, r.n_star,
                    "triangle(" + std::to_string(r.omega) + ")",
                    [w = r.omega] { return triangle_construction(w); });
    } else if (r.omega == 9 || r.omega == 12) {
      const int k = r.omega == 9 ? 5 : 7;
      row = witness("table1", r.omega, k, r.n_star, "extended(" + std::to_string(k) + ")",
                    [k] { return extended_polygon(k); });
    } else {
      int k = 0;
      for (const Table2Row& t : table2()) {
        if (t.omega == r.omega) k = t.k;
      }
      if (k == 0) {
        report.mismatches.push_back("table1 omega=" + std::to_string(r.omega) +
                                    " has no construction");
        continue;
      }
      row = witness("table1", r.omega, k, r.n_star, "polygon(" + std::to_string(k) + ")",
                    [k] { return polygon_construction(k); });
    }
    if (r.n_star > r.n) row.note = "n* exceeds n; the construction gives the upper bound";
    report.rows.push_back(row);
  }
  for (const TableCheck& row : report.rows) {
    if (!row.passed) {
      report.mismatches.push_back(row.table + " omega=" + std::to_string(row.omega) +
                                  " not witnessed by " + row.construction);
    }
  }
  for (const Table1Row& r : table1()) {
    if (r.n > r.n_star) {
      report.mismatches.push_back("table1 omega=" + std::to_string(r.omega) + " has n > n*");
    }
    const InterconnectChain c = interconnect(r.omega, 2, 3);
    // Independent re-addition of the chain.
    if (!c.lower_bound || *c.lower_bound != std::max(r.n, r.n_star) + 1) {
      report.mismatches.push_back("interconnect arithmetic at omega=" +
                                  std::to_string(r.omega));
    }
    report.arithmetic.push_back(c.to_string());
  }
  return report;
}

std::string tables_csv() {
  std::ostringstream out;
  out << "table,omega,n,n_star,k\n";
  for (const Table1Row& r : table1()) {
    out << "1," << r.omega << "," << r.n << "," << r.n_star << ",\n";
  }
  for (const Table2Row& r : table2()) {
    out << "2," << r.omega << ",," << r.n_star << "," << r.k << "\n";
  }
  return out.str();
}

}  // namespace petruska::bounds
