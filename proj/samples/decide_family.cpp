// Decide a few forms, then classify the twist family K_{n,0}.

#include <iostream>

#include "seifert_lspace.hpp"

using namespace seifert_lspace;

int main() {
  for (const char* text : {"SFS[S2; -2; 2/3, 2/3, 2/3]", "SFS[S2; -1; 1/2, 2/3, 4/5]", "SFS[S2; -1; 1/7, 1/3, 1/2]"}) {
    const LSpaceVerdict v = decide(parse_seifert(text));
    std::cout << text << ": " << verdict_summary(v) << "\n";
  }

  const FamilySpec spec = tunnel2_family(TunnelFamily::A);
  const FamilyReport rep = classify_family(*spec.data, Window{-3, 3});
  for (const auto& r : rep.records)
    std::cout << "n=" << r.n << " slope=" << r.slope << " " << to_string(r.form) << " "
              << (r.verdict.is_lspace ? "L-space" : "not L-space") << "\n";
  std::cout << "tails: n >= " << rep.tail_pos.start << " and n <= " << rep.tail_neg.start << " certified L-space\n";
}
