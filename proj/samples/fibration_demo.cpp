// Builds y^2 = x^3 + (a t^8 + b) x + (c t^4 + d t^12) with h1 = h2 = 0 and
// walks through the analysis for sigma = (4,2,7) and tau = (4,6,3).

#include <iostream>

#include "k3auto/k3auto.hpp"

int main() {
  using namespace k3auto;
  const auto rows = enumerate_cases();
  const PaperExample ex = paper_example(3, "i16");
  std::cout << "a(t) = " << ex.fibration.a.to_string("t") << "\n"
            << "b(t) = " << ex.fibration.b.to_string("t") << "\n"
            << "Delta(t) = " << ex.fibration.delta().to_string("t") << "\n";

  for (const auto& v : ex.variants) {
    const AnalysisReport r = analyze(ex.fibration, v.automorphism, std::nullopt, rows);
    std::cout << "\n" << v.name << " " << r.automorphism.to_string() << ", omega -> z^" << r.two_form_exponent
              << " omega\n";
    for (const auto& [k, n] : r.inventory) std::cout << "  " << n << " x " << k << "\n";
    for (const auto& a : r.actions) {
      std::cout << "  over " << a.place.to_string() << ": " << a.label << "\n";
      for (const auto& p : a.points) std::cout << "    " << p.descriptor << ": type " << p.type.to_string() << "\n";
    }
    std::cout << "  row " << (r.matched_row ? std::to_string(*r.matched_row) : "none") << "\n";
  }
  return 0;
}
