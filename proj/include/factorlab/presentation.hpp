#ifndef FACTORLAB_PRESENTATION_HPP_
#define FACTORLAB_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factorlab/word.hpp"

namespace factorlab {

  struct Generator {
    Letter      id;
    std::string name;
  };

  // An ordered pair (lhs, rhs) of words.
  struct Relation {
    Word lhs;
    Word rhs;

    // |lhs| - |rhs|
    [[nodiscard]] long delta() const noexcept {
      return static_cast<long>(lhs.length()) - static_cast<long>(rhs.length());
    }
    // (a, a) pairs generate no transitions that change the word.
    [[nodiscard]] bool inert() const noexcept {
      return lhs == rhs;
    }
    [[nodiscard]] Relation reversed() const {
      return Relation{rhs, lhs};
    }

    friend bool operator==(Relation const&, Relation const&) = default;
    friend auto operator<=>(Relation const&, Relation const&) = default;
  };

  // Reported with 1-based line and column of the offending token.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // A word that does not parse over a presentation's alphabet.
  class WordError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // The finitely presented monoid <X | R>. Immutable after construction;
  // the symmetric closure of R is computed once and shared by every
  // rewriting routine.
  class Presentation {
   public:
    Presentation() = default;

    // Throws std::invalid_argument on bad or duplicate names, or on relation
    // words that mention letters outside the alphabet. Duplicate relations are
    // dropped and recorded in diagnostics().
    Presentation(std::vector<std::string> generator_names,
                 std::vector<Relation>    relations);

    [[nodiscard]] std::size_t generator_count() const noexcept {
      return generators_.size();
    }
    [[nodiscard]] std::vector<Generator> const& generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::string const& name(Letter x) const {
      return generators_.at(x).name;
    }
    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;

    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    [[nodiscard]] std::vector<Relation> const& closure() const noexcept {
      return closure_;
    }
    [[nodiscard]] std::vector<std::string> const& diagnostics() const noexcept {
      return diagnostics_;
    }

    // True if some closure relation has an empty side.
    [[nodiscard]] bool has_empty_side() const noexcept {
      return has_empty_side_;
    }

    // Generators occurring in at least one relation, in increasing order.
    [[nodiscard]] std::vector<Letter> relation_letters() const;

    // Generators occurring in no relation.
    [[nodiscard]] std::vector<Letter> free_letters() const;

    // Whitespace separated generator names, or "1" for the empty word.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    // Inverse of parse_word; `separator` goes between names.
    [[nodiscard]] std::string format(Word const&      w,
                                     std::string_view separator = " ") const;

    friend bool operator==(Presentation const& a, Presentation const& b) {
      return a.generators_names() == b.generators_names()
             && a.relations_ == b.relations_;
    }

   private:
    [[nodiscard]] std::vector<std::string> generators_names() const;

    std::vector<Generator>   generators_;
    std::vector<Relation>    relations_;
    std::vector<Relation>    closure_;
    std::vector<std::string> diagnostics_;
    bool                     has_empty_side_ = false;
  };

  // Parses the text format:
  //
  //   gens: x y z
  //   rel: x y = y z x     # comment
  //   rel: x x = 1
  //
  [[nodiscard]] Presentation parse_presentation(std::string_view text);

  // Reads and parses a file; I/O failures are reported as ParseError at 0:0.
  [[nodiscard]] Presentation load_presentation(std::string const& path);

  // Deterministic text in the parse_presentation format.
  [[nodiscard]] std::string serialize(Presentation const& p);

  // Smallest symmetric superset of p.relations(), without duplicates. Pairs
  // (a, a) are kept and can be recognised with Relation::inert().
  [[nodiscard]] std::vector<Relation> symmetric_closure(Presentation const& p);

  // |a| - |b| for every (a, b) in p.relations(), in the given orientation.
  [[nodiscard]] std::vector<long> relation_deltas(Presentation const& p);

  // Graph on the generators with an edge {x, y} whenever some relation pair
  // has sides starting (left graph) or ending (right graph) with x and y.
  struct SideGraph {
    std::size_t                          vertex_count = 0;
    std::vector<std::pair<Letter, Letter>> edges;  // x < y, sorted, unique
    // Set when some pair has equal first (respectively last) letters.
    bool has_self_loop = false;

    [[nodiscard]] bool is_acyclic() const;
  };

  // Pairs with an empty side contribute nothing; see adyan_check.
  [[nodiscard]] std::pair<SideGraph, SideGraph>
  side_graphs(Presentation const& p);

}  // namespace factorlab

#endif  // FACTORLAB_PRESENTATION_HPP_
