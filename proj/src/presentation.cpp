#include "factorlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace factorlab {

  ParseError::ParseError(std::size_t        line,
                         std::size_t        column,
                         std::string const& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column)
                           + ": " + what),
        line_(line),
        column_(column) {}

  namespace {

    bool valid_name(std::string_view name) {
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size()
               && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i == line.size()) {
          break;
        }
        std::size_t j = i;
        while (j < line.size()
               && !std::isspace(static_cast<unsigned char>(line[j]))) {
          ++j;
        }
        out.push_back({line.substr(i, j - i), offset + i + 1});
        i = j;
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<std::string> generator_names,
                             std::vector<Relation>    relations) {
    if (generator_names.size() > 0xFFFF) {
      throw std::invalid_argument("too many generators");
    }
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      auto& name = generator_names[i];
      if (!valid_name(name)) {
        throw std::invalid_argument("invalid generator name '" + name + "'");
      }
      if (find(name)) {
        throw std::invalid_argument("duplicate generator name '" + name + "'");
      }
      generators_.push_back({static_cast<Letter>(i), std::move(name)});
    }
    for (auto& rel : relations) {
      for (Word const* w : {&rel.lhs, &rel.rhs}) {
        for (Letter x : *w) {
          if (x >= generators_.size()) {
            throw std::invalid_argument("relation uses unknown generator id "
                                        + std::to_string(x));
          }
        }
      }
      if (std::find(relations_.begin(), relations_.end(), rel)
          != relations_.end()) {
        diagnostics_.push_back("warning: duplicate relation " + format(rel.lhs)
                               + " = " + format(rel.rhs) + " ignored");
        continue;
      }
      relations_.push_back(std::move(rel));
    }
    for (auto const& rel : relations_) {
      for (Relation const& r : {rel, rel.reversed()}) {
        if (std::find(closure_.begin(), closure_.end(), r) == closure_.end()) {
          closure_.push_back(r);
        }
      }
      has_empty_side_ = has_empty_side_ || rel.lhs.empty() || rel.rhs.empty();
    }
  }

  std::optional<Letter> Presentation::find(std::string_view name) const {
    for (auto const& g : generators_) {
      if (g.name == name) {
        return g.id;
      }
    }
    return std::nullopt;
  }

  std::vector<Letter> Presentation::relation_letters() const {
    std::vector<bool> used(generators_.size(), false);
    for (auto const& rel : relations_) {
      for (Letter x : rel.lhs) {
        used[x] = true;
      }
      for (Letter x : rel.rhs) {
        used[x] = true;
      }
    }
    std::vector<Letter> out;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i]) {
        out.push_back(static_cast<Letter>(i));
      }
    }
    return out;
  }

  std::vector<Letter> Presentation::free_letters() const {
    auto                used = relation_letters();
    std::vector<Letter> out;
    for (auto const& g : generators_) {
      if (!std::binary_search(used.begin(), used.end(), g.id)) {
        out.push_back(g.id);
      }
    }
    return out;
  }

  Word Presentation::parse_word(std::string_view text) const {
    auto tokens = tokenize(text, 0);
    if (tokens.empty()) {
      throw WordError("empty word text (write 1 for the identity)");
    }
    if (tokens.size() == 1 && tokens[0].text == "1") {
      return Word{};
    }
    std::vector<Letter> symbols;
    for (auto const& tok : tokens) {
      auto x = find(tok.text);
      if (!x) {
        throw WordError("unknown generator '" + std::string(tok.text)
                        + "' at column " + std::to_string(tok.column));
      }
      symbols.push_back(*x);
    }
    return Word(std::move(symbols));
  }

  std::string Presentation::format(Word const&      w,
                                   std::string_view separator) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (i != 0) {
        out += separator;
      }
      out += name(w[i]);
    }
    return out;
  }

  std::vector<std::string> Presentation::generators_names() const {
    std::vector<std::string> out;
    for (auto const& g : generators_) {
      out.push_back(g.name);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  Presentation parse_presentation(std::string_view text) {
    std::optional<std::vector<std::string>> gens;
    std::size_t                             gens_line = 0;
    std::unordered_map<std::string, Letter> index;
    std::vector<Relation>                   relations;
    std::size_t                             first_rel_line = 0;

    auto parse_side = [&](std::vector<Token> const& toks,
                          std::size_t               line,
                          std::size_t               column_if_empty) {
      if (toks.empty()) {
        throw ParseError(line,
                         column_if_empty,
                         "empty relation side (write 1 for the identity)");
      }
      if (toks.size() == 1 && toks[0].text == "1") {
        return Word{};
      }
      std::vector<Letter> symbols;
      for (auto const& tok : toks) {
        if (tok.text == "1") {
          throw ParseError(
              line, tok.column, "identity '1' must be the whole side");
        }
        auto it = index.find(std::string(tok.text));
        if (it == index.end()) {
          throw ParseError(line,
                           tok.column,
                           "unknown generator '" + std::string(tok.text) + "'");
        }
        symbols.push_back(it->second);
      }
      return Word(std::move(symbols));
    };

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, first + 1, "expected 'gens:' or 'rel:'");
      }
      auto keyword = line.substr(first, colon - first);
      while (!keyword.empty() && (keyword.back() == ' ' || keyword.back() == '\t')) {
        keyword.remove_suffix(1);
      }
      auto body = line.substr(colon + 1);
      if (keyword == "gens") {
        if (gens) {
          throw ParseError(line_no,
                           first + 1,
                           "duplicate 'gens:' line (first on line "
                               + std::to_string(gens_line) + ")");
        }
        if (!relations.empty()) {
          throw ParseError(line_no, first + 1, "'gens:' must precede 'rel:'");
        }
        gens.emplace();
        gens_line = line_no;
        for (auto const& tok : tokenize(body, colon + 1)) {
          std::string name(tok.text);
          if (!valid_name(name)) {
            throw ParseError(
                line_no, tok.column, "invalid generator name '" + name + "'");
          }
          if (index.count(name) != 0) {
            throw ParseError(line_no,
                             tok.column,
                             "duplicate generator name '" + name + "'");
          }
          index.emplace(name, static_cast<Letter>(gens->size()));
          gens->push_back(std::move(name));
        }
      } else if (keyword == "rel") {
        if (!gens) {
          throw ParseError(line_no, first + 1, "'rel:' before 'gens:'");
        }
        if (gens->empty()) {
          throw ParseError(
              line_no, first + 1, "relation given for an empty generator list");
        }
        auto eq = body.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line_no, colon + 2, "expected '=' in relation");
        }
        if (body.find('=', eq + 1) != std::string_view::npos) {
          throw ParseError(line_no,
                           colon + 2 + body.find('=', eq + 1),
                           "more than one '=' in relation");
        }
        auto lhs = parse_side(tokenize(body.substr(0, eq), colon + 1),
                              line_no,
                              colon + 2);
        auto rhs = parse_side(tokenize(body.substr(eq + 1), colon + 2 + eq),
                              line_no,
                              colon + 2 + eq + 1);
        if (first_rel_line == 0) {
          first_rel_line = line_no;
        }
        relations.push_back({std::move(lhs), std::move(rhs)});
      } else {
        throw ParseError(line_no,
                         first + 1,
                         "unknown keyword '" + std::string(keyword) + "'");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!gens) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'gens:' line");
    }
    return Presentation(std::move(*gens), std::move(relations));
  }

  Presentation load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, 0, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }

  std::string serialize(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& g : p.generators()) {
      out += ' ';
      out += g.name;
    }
    out += '\n';
    for (auto const& rel : p.relations()) {
      out += "rel: " + p.format(rel.lhs) + " = " + p.format(rel.rhs) + "\n";
    }
    return out;
  }

  std::vector<Relation> symmetric_closure(Presentation const& p) {
    return p.closure();
  }

  std::vector<long> relation_deltas(Presentation const& p) {
    std::vector<long> out;
    out.reserve(p.relations().size());
    for (auto const& rel : p.relations()) {
      out.push_back(rel.delta());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Side graphs
  ////////////////////////////////////////////////////////////////////////

  bool SideGraph::is_acyclic() const {
    if (has_self_loop) {
      return false;
    }
    // A simple graph is a forest iff union-find never joins two vertices
    // that are already connected.
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    };
    for (auto [x, y] : edges) {
      auto rx = root(x);
      auto ry = root(y);
      if (rx == ry) {
        return false;
      }
      parent[rx] = ry;
    }
    return true;
  }

  std::pair<SideGraph, SideGraph> side_graphs(Presentation const& p) {
    SideGraph left, right;
    left.vertex_count  = p.generator_count();
    right.vertex_count = p.generator_count();
    auto add = [](SideGraph& g, Letter x, Letter y) {
      if (x == y) {
        g.has_self_loop = true;
        return;
      }
      g.edges.emplace_back(std::min(x, y), std::max(x, y));
    };
    for (auto const& rel : p.relations()) {
      if (rel.lhs.empty() || rel.rhs.empty()) {
        continue;
      }
      add(left, rel.lhs.front(), rel.rhs.front());
      add(right, rel.lhs.back(), rel.rhs.back());
    }
    for (SideGraph* g : {&left, &right}) {
      std::sort(g->edges.begin(), g->edges.end());
      g->edges.erase(std::unique(g->edges.begin(), g->edges.end()),
                     g->edges.end());
    }
    return {left, right};
  }

}  // namespace factorlab
