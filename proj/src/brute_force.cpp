#include "factorlab/brute_force.hpp"

#include <algorithm>
#include <utility>

namespace factorlab {

  BruteForceClass brute_force_class(Word const&         seed,
                                    Presentation const& p,
                                    std::size_t         max_len,
                                    std::size_t         max_states) {
    using Symbols = std::vector<Letter>;
    std::vector<std::pair<Symbols, Symbols>> rules;
    for (auto const& rel : p.relations()) {
      Symbols l(rel.lhs.begin(), rel.lhs.end());
      Symbols r(rel.rhs.begin(), rel.rhs.end());
      rules.emplace_back(l, r);
      rules.emplace_back(r, l);
    }

    BruteForceClass out;
    out.members.insert(Symbols(seed.begin(), seed.end()));
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<Symbols> next = out.members;
      for (auto const& w : out.members) {
        for (auto const& [from, to] : rules) {
          if (from.size() > w.size()) {
            continue;
          }
          for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
            if (!std::equal(from.begin(), from.end(), w.begin() + pos)) {
              continue;
            }
            if (w.size() - from.size() + to.size() > max_len) {
              out.exact = false;
              continue;
            }
            Symbols v(w.begin(), w.begin() + pos);
            v.insert(v.end(), to.begin(), to.end());
            v.insert(v.end(), w.begin() + pos + from.size(), w.end());
            if (next.insert(std::move(v)).second) {
              changed = true;
            }
          }
        }
      }
      out.members = std::move(next);
      if (out.members.size() > max_states) {
        out.exact = false;
        break;
      }
    }
    return out;
  }

}  // namespace factorlab
