#include "verify/rpoly_oracle.hpp"

#include <set>

namespace whitt::oracle {

RPolyOracle::RPolyOracle(const WeylSubgroup& g) {
  const auto& el = g.elements();
  const auto& len = g.lengths();
  n_ = static_cast<int>(el.size());
  leq_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (int w = 0; w < n_; ++w) {
    auto word = g.reduced_word(el[w]);
    std::set<int> below;
    const std::size_t m = word.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      WeylElement x = WeylElement::identity(g.rank());
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) x = x * g.generators()[word[i]];
      below.insert(g.index_of(x));
    }
    for (int x : below) leq_[x * n_ + w] = true;
  }

  auto right = [&](int i, int s) { return g.index_of(el[i] * g.generators()[s]); };
  const IntPoly q = IntPoly::monomial(1, 1);
  const IntPoly q_minus_1 = q - IntPoly(1);

  r_.assign(static_cast<std::size_t>(n_) * n_, IntPoly());
  for (int w = 0; w < n_; ++w) {
    if (len[w] == 0) {
      r_[w * n_ + w] = IntPoly(1);
      continue;
    }
    int s = 0;
    while (len[right(w, s)] > len[w]) ++s;
    const int ws = right(w, s);
    for (int x = 0; x < n_; ++x) {
      if (!leq(x, w)) continue;
      const int xs = right(x, s);
      if (len[xs] < len[x])
        r_[x * n_ + w] = R(xs, ws);
      else
        r_[x * n_ + w] = q_minus_1 * R(x, ws) + q * R(xs, ws);
    }
  }

  // q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w} = sum_{x<y<=w} R_{x,y} P_{y,w}; the two
  // sides of the left live in disjoint degree ranges.
  p_.assign(static_cast<std::size_t>(n_) * n_, IntPoly());
  for (int w = 0; w < n_; ++w) {
    p_[w * n_ + w] = IntPoly(1);
    for (int x = n_ - 1; x >= 0; --x) {
      if (x == w || !leq(x, w)) continue;
      IntPoly sum;
      for (int y = 0; y < n_; ++y)
        if (y != x && leq(x, y) && leq(y, w)) sum += R(x, y) * P(y, w);
      const int L = len[w] - len[x];
      p_[x * n_ + w] = IntPoly() - sum.truncated((L + 1) / 2);
    }
  }
}

}  // namespace whitt::oracle
