#ifndef FACTORLAB_TESTS_SUPPORT_HPP_
#define FACTORLAB_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "factorlab/brute_force.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/word.hpp"

namespace factorlab::test {

  inline Presentation m1() {
    return parse_presentation("gens: x y z\nrel: x y = y z x\n");
  }

  // <x,y | (xy, y^n x)>
  inline Presentation m2(std::size_t n) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rhs += "y ";
    }
    return parse_presentation("gens: x y\nrel: x y = " + rhs + "x\n");
  }

  // <u,v,x,y | (u^2, v^3), (xy, y^n x)>
  inline Presentation m3(std::size_t n) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rhs += "y ";
    }
    return parse_presentation("gens: u v x y\nrel: u u = v v v\nrel: x y = "
                              + rhs + "x\n");
  }

  inline Presentation free_monoid(std::size_t n) {
    std::string gens = "gens:";
    for (std::size_t i = 0; i < n; ++i) {
      gens += " g" + std::to_string(i);
    }
    return parse_presentation(gens + "\n");
  }

  inline Word w(Presentation const& p, std::string const& text) {
    return p.parse_word(text);
  }

  inline std::set<std::vector<Letter>> as_set(std::vector<Word> const& ws) {
    std::set<std::vector<Letter>> out;
    for (auto const& x : ws) {
      out.insert(std::vector<Letter>(x.begin(), x.end()));
    }
    return out;
  }

  // Sorted distinct lengths of a naive class.
  inline std::vector<std::size_t>
  naive_lengths(BruteForceClass const& cls) {
    std::set<std::size_t> s;
    for (auto const& m : cls.members) {
      s.insert(m.size());
    }
    return {s.begin(), s.end()};
  }

  inline Word random_word(std::mt19937& rng,
                          std::size_t   alphabet,
                          std::size_t   min_len,
                          std::size_t   max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<Letter> letter(
        0, static_cast<Letter>(alphabet - 1));
    std::vector<Letter> s(len(rng));
    for (auto& x : s) {
      x = letter(rng);
    }
    return Word(std::move(s));
  }

  inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
  }

}  // namespace factorlab::test

#endif  // FACTORLAB_TESTS_SUPPORT_HPP_
