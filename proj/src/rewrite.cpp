#include "factorlab/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "factorlab/detail/bfs.hpp"

namespace factorlab {

  ////////////////////////////////////////////////////////////////////////
  // WordTable
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    std::size_t WordTable::probe(std::span<Letter const> w,
                                 std::size_t             h) const {
      std::size_t mask = slots_.size() - 1;
      for (std::size_t i = h & mask;; i = (i + 1) & mask) {
        id_type s = slots_[i];
        if (s == 0) {
          return i;
        }
        id_type id = s - 1;
        if (hashes_[id] == h) {
          auto stored = (*this)[id];
          if (stored.size() == w.size()
              && std::equal(stored.begin(), stored.end(), w.begin())) {
            return i;
          }
        }
      }
    }

    std::pair<WordTable::id_type, bool>
    WordTable::insert(std::span<Letter const> w) {
      std::size_t h    = hash_letters(w);
      std::size_t slot = probe(w, h);
      if (slots_[slot] != 0) {
        return {slots_[slot] - 1, false};
      }
      if (hashes_.size() >= std::numeric_limits<id_type>::max() - 1) {
        throw std::length_error("word table full");
      }
      auto id = static_cast<id_type>(hashes_.size());
      arena_.insert(arena_.end(), w.begin(), w.end());
      offsets_.push_back(arena_.size());
      hashes_.push_back(h);
      slots_[slot] = id + 1;
      if (2 * hashes_.size() > slots_.size()) {
        grow();
      }
      return {id, true};
    }

    std::optional<WordTable::id_type>
    WordTable::find(std::span<Letter const> w) const {
      std::size_t slot = probe(w, hash_letters(w));
      if (slots_[slot] == 0) {
        return std::nullopt;
      }
      return slots_[slot] - 1;
    }

    void WordTable::grow() {
      std::vector<id_type> fresh(slots_.size() * 2, 0);
      std::size_t          mask = fresh.size() - 1;
      for (id_type id = 0; id < hashes_.size(); ++id) {
        std::size_t i = hashes_[id] & mask;
        while (fresh[i] != 0) {
          i = (i + 1) & mask;
        }
        fresh[i] = id + 1;
      }
      slots_ = std::move(fresh);
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Budgets
  ////////////////////////////////////////////////////////////////////////

  ExplorationBudget ExplorationBudget::for_seed(std::size_t seed_len) {
    return ExplorationBudget{4 * seed_len + 8, 1'000'000, 10'000'000};
  }

  void ExplorationBudget::validate(std::size_t seed_len) const {
    if (max_word_len == 0 || max_states == 0 || max_transitions == 0) {
      throw std::invalid_argument("exploration budget limits must be positive");
    }
    if (seed_len > max_word_len) {
      throw std::invalid_argument("seed of length " + std::to_string(seed_len)
                                  + " exceeds max_word_len "
                                  + std::to_string(max_word_len));
    }
  }

  ExplorationBudget BudgetPolicy::for_seed(std::size_t seed_len) const {
    ExplorationBudget b = ExplorationBudget::for_seed(seed_len);
    switch (preset) {
      case Preset::small:
        b = {2 * seed_len + 4, 10'000, 100'000};
        break;
      case Preset::standard:
        break;
      case Preset::large:
        b = {16 * seed_len + 64, 10'000'000, 100'000'000};
        break;
    }
    if (max_word_len) {
      b.max_word_len = std::max(*max_word_len, seed_len);
    }
    if (max_states) {
      b.max_states = *max_states;
    }
    if (max_transitions) {
      b.max_transitions = *max_transitions;
    }
    return b;
  }

  BudgetPolicy::Preset BudgetPolicy::parse_preset(std::string_view name) {
    if (name == "small") {
      return Preset::small;
    }
    if (name == "default") {
      return Preset::standard;
    }
    if (name == "large") {
      return Preset::large;
    }
    throw std::invalid_argument("unknown budget preset '" + std::string(name)
                                + "'");
  }

  std::string_view BudgetPolicy::preset_name(Preset p) {
    switch (p) {
      case Preset::small:
        return "small";
      case Preset::standard:
        return "default";
      case Preset::large:
        return "large";
    }
    return "default";
  }

  std::string_view to_string(Truncation t) {
    switch (t) {
      case Truncation::word_len:
        return "word_len";
      case Truncation::states:
        return "states";
      case Truncation::transitions:
        return "transitions";
    }
    return "unknown";
  }

  std::string_view to_string(Equality e) {
    switch (e) {
      case Equality::yes:
        return "yes";
      case Equality::no_within_budget:
        return "no_within_budget";
      case Equality::definitely_not:
        return "definitely_not";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Transitions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Closure indices grouped by the first letter of their left side; left
    // sides that are empty match everywhere and are merged into each bucket.
    struct RelationIndex {
      std::vector<std::vector<std::uint32_t>> by_first;
      std::vector<std::uint32_t>              empty_lhs;

      explicit RelationIndex(Presentation const& p)
          : by_first(p.generator_count()) {
        auto const& closure = p.closure();
        for (std::uint32_t i = 0; i < closure.size(); ++i) {
          auto const& rel = closure[i];
          if (rel.inert()) {
            continue;
          }
          if (rel.lhs.empty()) {
            empty_lhs.push_back(i);
            for (auto& bucket : by_first) {
              bucket.push_back(i);
            }
          } else {
            by_first[rel.lhs.front()].push_back(i);
          }
        }
        for (auto& bucket : by_first) {
          std::sort(bucket.begin(), bucket.end());
        }
      }

      std::vector<std::uint32_t> const& at(std::span<Letter const> w,
                                           std::size_t pos) const {
        return pos < w.size() ? by_first[w[pos]] : empty_lhs;
      }
    };

    bool matches(std::span<Letter const> w,
                 std::size_t             pos,
                 Word const&             pattern) {
      if (pattern.length() > w.size() - pos) {
        return false;
      }
      return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
    }

  }  // namespace

  std::vector<TransitionStep> neighbors(Word const& w, Presentation const& p) {
    RelationIndex               index(p);
    auto const&                 closure = p.closure();
    std::vector<TransitionStep> out;
    auto                        symbols = w.symbols();
    for (std::size_t pos = 0; pos <= symbols.size(); ++pos) {
      for (auto r : index.at(symbols, pos)) {
        auto const& rel = closure[r];
        if (matches(symbols, pos, rel.lhs)) {
          out.push_back(
              {w, w.replaced(pos, rel.lhs.length(), rel.rhs), r, pos});
        }
      }
    }
    return out;
  }

  bool is_valid_step(TransitionStep const& step, Presentation const& p) {
    if (step.relation_index >= p.closure().size()) {
      return false;
    }
    auto const& rel = p.closure()[step.relation_index];
    if (!step.from.matches_at(rel.lhs.symbols(), step.position)) {
      return false;
    }
    return step.from.replaced(step.position, rel.lhs.length(), rel.rhs)
           == step.to;
  }

  ////////////////////////////////////////////////////////////////////////
  // FactorizationClass
  ////////////////////////////////////////////////////////////////////////

  bool FactorizationClass::contains(Word const& w) const {
    return bfs_.table.find(w.symbols()).has_value();
  }

  std::optional<std::size_t> FactorizationClass::index_of(Word const& w) const {
    auto id = bfs_.table.find(w.symbols());
    if (!id) {
      return std::nullopt;
    }
    return *id;
  }

  std::vector<TransitionStep> FactorizationClass::path_to(std::size_t i) const {
    std::vector<TransitionStep> path;
    while (i != 0) {
      auto const& link = bfs_.links.at(i);
      path.push_back({members_[link.parent],
                      members_[i],
                      link.relation_index,
                      link.position});
      i = link.parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::vector<std::size_t> FactorizationClass::lengths() const {
    std::vector<std::size_t> out;
    out.reserve(members_.size());
    for (auto const& w : members_) {
      out.push_back(w.length());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace detail {

    BfsResult breadth_first(std::span<Letter const>  seed,
                            Presentation const&      p,
                            ExplorationBudget const& b) {
      b.validate(seed.size());
      for (Letter x : seed) {
        if (x >= p.generator_count()) {
          throw std::invalid_argument(
              "seed uses a letter outside the alphabet");
        }
      }
      RelationIndex index(p);
      auto const&   closure = p.closure();
      BfsResult     out;

      out.table.insert(seed);
      out.links.push_back({0, 0, 0});

      auto hard_stop = [&](Truncation t) {
        // A hard stop is more informative than a skipped long word.
        if (!out.truncation || *out.truncation == Truncation::word_len) {
          out.truncation = t;
        }
      };

      std::vector<Letter> current;
      std::vector<Letter> candidate;
      bool                stop = false;
      for (std::uint32_t head = 0; head < out.table.size() && !stop; ++head) {
        auto view = out.table[head];
        current.assign(view.begin(), view.end());
        for (std::size_t pos = 0; pos <= current.size() && !stop; ++pos) {
          for (auto r : index.at(current, pos)) {
            auto const& rel = closure[r];
            if (!matches(current, pos, rel.lhs)) {
              continue;
            }
            if (++out.transitions > b.max_transitions) {
              hard_stop(Truncation::transitions);
              stop = true;
              break;
            }
            std::size_t len
                = current.size() - rel.lhs.length() + rel.rhs.length();
            if (len > b.max_word_len) {
              if (!out.truncation) {
                out.truncation = Truncation::word_len;
              }
              continue;
            }
            candidate.clear();
            candidate.insert(
                candidate.end(), current.begin(), current.begin() + pos);
            candidate.insert(candidate.end(), rel.rhs.begin(), rel.rhs.end());
            candidate.insert(candidate.end(),
                             current.begin() + pos + rel.lhs.length(),
                             current.end());
            if (out.table.size() >= b.max_states
                && !out.table.find(candidate)) {
              hard_stop(Truncation::states);
              stop = true;
              break;
            }
            if (out.table.insert(candidate).second) {
              out.links.push_back({head,
                                   static_cast<std::uint32_t>(r),
                                   static_cast<std::uint32_t>(pos)});
            }
          }
        }
      }
      return out;
    }

  }  // namespace detail

  FactorizationClass explore_class(Word const&              seed,
                                   Presentation const&      p,
                                   ExplorationBudget const& b) {
    FactorizationClass out;
    out.bfs_ = detail::breadth_first(seed.symbols(), p, b);
    auto const& table = out.bfs_.table;
    out.members_.reserve(table.size());
    for (std::uint32_t id = 0; id < table.size(); ++id) {
      auto view = table[id];
      out.members_.emplace_back(std::vector<Letter>(view.begin(), view.end()));
    }
    return out;
  }

  Equality equal_in_M(Word const&              a,
                      Word const&              b,
                      Presentation const&      p,
                      ExplorationBudget const& budget) {
    auto cls = explore_class(a, p, budget);
    if (cls.contains(b)) {
      return Equality::yes;
    }
    return cls.exact() ? Equality::definitely_not : Equality::no_within_budget;
  }

  ////////////////////////////////////////////////////////////////////////
  // Swap table and normal form
  ////////////////////////////////////////////////////////////////////////

  bool GeneratorSwapTable::complete() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto const& e) {
      return e.has_value();
    });
  }

  std::optional<Word> nu_normal_form(Word const&               a,
                                     Presentation const&       p,
                                     GeneratorSwapTable const& swap_table,
                                     ExplorationBudget const&  budget) {
    std::size_t const n = p.generator_count();
    if (n == 0) {
      throw std::invalid_argument("normal form needs a nonempty alphabet");
    }
    if (swap_table.generator_count() != n || !swap_table.complete()) {
      throw std::invalid_argument("generator swap table is incomplete");
    }
    // backward[(z, x)] lists every y with x y =_M z x.
    std::vector<std::vector<Letter>> backward(n * n);
    for (Letter x = 0; x < n; ++x) {
      for (Letter y = 0; y < n; ++y) {
        Letter z = swap_table.at(x, y)->z;
        backward[static_cast<std::size_t>(z) * n + x].push_back(y);
      }
    }

    detail::WordTable table;
    table.insert(a.symbols());
    std::optional<std::vector<std::size_t>> best;
    std::vector<Letter>                     current;
    for (std::uint32_t head = 0; head < table.size(); ++head) {
      auto view = table[head];
      current.assign(view.begin(), view.end());
      if (std::is_sorted(current.begin(), current.end())) {
        std::vector<std::size_t> exponents(n, 0);
        for (Letter x : current) {
          ++exponents[x];
        }
        if (!best || exponents < *best) {
          best = std::move(exponents);
        }
      }
      auto visit = [&](std::size_t i, Letter first, Letter second) {
        if (first == current[i] && second == current[i + 1]) {
          return true;
        }
        std::swap(current[i], first);
        std::swap(current[i + 1], second);
        table.insert(current);
        std::swap(current[i], first);
        std::swap(current[i + 1], second);
        return table.size() <= budget.max_states;
      };
      for (std::size_t i = 0; i + 1 < current.size(); ++i) {
        Letter x = current[i];
        Letter y = current[i + 1];
        if (!visit(i, swap_table.at(x, y)->z, x)) {
          return std::nullopt;
        }
        for (Letter y2 : backward[static_cast<std::size_t>(x) * n + y]) {
          if (!visit(i, y, y2)) {
            return std::nullopt;
          }
        }
      }
    }
    if (!best) {
      return std::nullopt;
    }
    std::vector<Letter> out;
    for (Letter x = 0; x < n; ++x) {
      out.insert(out.end(), (*best)[x], x);
    }
    return Word(std::move(out));
  }

}  // namespace factorlab
