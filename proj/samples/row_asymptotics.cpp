// Prints exact S(n,j) next to the local approximant across one row.
#include <cstdlib>
#include <iostream>

#include "stirling/stirling.hpp"

int main(int argc, char** argv) {
  using namespace stirling;
  const unsigned long n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 60;
  const Precision prec = bits_for_digits(40);
  const auto row = integer_row(Kind::stirling, n);
  const SeqParams p = abc(Kind::stirling, n, prec);
  std::cout << "n = " << n << ", a = " << p.a.to_string(12) << ", b = " << p.b.to_string(12) << '\n';
  for (unsigned long j = 1; j <= n; ++j) {
    const ApproxReport r = ratio_report(Kind::stirling, n, static_cast<long>(j), row, prec);
    if (!r.valid) continue;
    std::cout << j << '\t' << r.exact.get_str().size() << " digits\tratio " << r.ratio.to_string(10) << '\n';
  }
}
