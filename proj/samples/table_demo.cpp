// Enumerates the classification and cross-checks every row.

#include <iostream>

#include "k3auto/k3auto.hpp"

int main() {
  using namespace k3auto;
  const auto rows = enumerate_cases();
  int failures = 0;
  for (const auto& row : rows) {
    const RowReport rep = validate_row(row);
    std::cout << row.index << ": (r,l,m)=(" << row.r << "," << row.l << "," << row.m << ") rkPic=" << row.rk_pic
              << " (n2,n3,n4)=(" << row.n2 << "," << row.n3 << "," << row.n4 << ") k=" << row.k << "  "
              << row.action.first << " / " << row.action.second << (rep.all_pass() ? "" : "  [check failed]") << "\n";
    failures += rep.all_pass() ? 0 : 1;
  }
  const auto groups = theorem1_groups(rows);
  const char* titles[] = {"sigma fixes an elliptic curve", "only sigma^2 does", "neither"};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::cout << titles[g] << ":";
    for (const auto& t : groups[g]) std::cout << " (" << t.k << "," << t.N << "," << t.rk_pic << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
