#pragma once

// Line-oriented instance files.
//
//   # comment
//   semigroup <n>          followed by n rows of n element indices
//   names <n labels>
//   congruence <k>         followed by one row of n class ids in [0, k)
//   congruence-gen <p>     followed by p rows "a b"
//   action <m>             followed by n rows of m tokens, each an index in
//                          [0, m) or "-" for undefined
//   subset <indices>
//
// `semigroup` must come first; the other blocks are optional, appear at most
// once, and at most one congruence block is allowed. `emit_instance` writes
// the blocks in the order above.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/congruence.hpp"
#include "invsemi/core.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/error.hpp"
#include "invsemi/pbij.hpp"

namespace invsemi {

  struct InstanceFile {
    struct CongruenceBlock {
      bool                                             generated = false;
      std::size_t                                      num_classes = 0;
      std::vector<std::size_t>                         class_of;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;

      friend bool operator==(CongruenceBlock const&, CongruenceBlock const&)
          = default;
    };

    struct ActionBlock {
      std::size_t                           ground = 0;
      std::vector<std::vector<std::size_t>> rows;  // PartialBijection::undefined for "-"

      friend bool operator==(ActionBlock const&, ActionBlock const&) = default;
    };

    Table                                   table;
    std::vector<std::string>                names;
    std::optional<CongruenceBlock>          congruence;
    std::optional<ActionBlock>              action;
    std::optional<std::vector<std::size_t>> subset;

    friend bool operator==(InstanceFile const&, InstanceFile const&) = default;
  };

  namespace detail {
    [[noreturn]] inline void parse_error(std::size_t line, std::string const& why) {
      throw Error("ParseError", concat("line ", line, ": ", why), {line});
    }

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    inline std::vector<Line> tokenize(std::string const& text) {
      std::vector<Line>  out;
      std::istringstream in(text);
      std::string        raw;
      std::size_t        number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream words(raw);
        Line               line{number, {}};
        std::string        w;
        while (words >> w) {
          line.tokens.push_back(w);
        }
        if (!line.tokens.empty()) {
          out.push_back(std::move(line));
        }
      }
      return out;
    }

    inline std::size_t to_index(std::string const& tok, std::size_t line) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos
          || tok.size() > 9) {
        parse_error(line, "expected a non-negative integer, got '" + tok + "'");
      }
      return static_cast<std::size_t>(std::stoul(tok));
    }
  }  // namespace detail

  /// Parses the text of an instance file. Throws `Error("ParseError", ...,
  /// {line})`. Only syntax and index ranges are checked here; the algebra is
  /// validated when the blocks are used.
  inline InstanceFile parse_instance(std::string const& text) {
    using detail::parse_error;
    using detail::to_index;
    auto const   lines = detail::tokenize(text);
    InstanceFile inst;
    std::size_t  i = 0;
    std::size_t  last_line = lines.empty() ? 0 : lines.back().number;

    auto next_row = [&](std::size_t expected, std::string const& what) {
      if (i >= lines.size()) {
        parse_error(last_line + 1, "unexpected end of file in " + what);
      }
      auto const& l = lines[i++];
      if (l.tokens.size() != expected) {
        parse_error(l.number, detail::concat(what, " row has ", l.tokens.size(),
                                             " entries, expected ", expected));
      }
      return l;
    };

    auto header = [&](detail::Line const& l, std::size_t args) {
      if (l.tokens.size() != args + 1) {
        parse_error(l.number, "malformed '" + l.tokens[0] + "' line");
      }
    };

    if (lines.empty() || lines[0].tokens[0] != "semigroup") {
      parse_error(lines.empty() ? 1 : lines[0].number,
                  "file must start with 'semigroup <n>'");
    }
    header(lines[0], 1);
    std::size_t const n = to_index(lines[0].tokens[1], lines[0].number);
    if (n == 0) {
      parse_error(lines[0].number, "semigroup size must be positive");
    }
    ++i;
    for (std::size_t r = 0; r < n; ++r) {
      auto const&              l = next_row(n, "semigroup");
      std::vector<std::size_t> row;
      for (auto const& tok : l.tokens) {
        std::size_t const v = to_index(tok, l.number);
        if (v >= n) {
          parse_error(l.number, detail::concat("element ", v, " out of range"));
        }
        row.push_back(v);
      }
      inst.table.push_back(std::move(row));
    }

    while (i < lines.size()) {
      auto const& l  = lines[i++];
      auto const& kw = l.tokens[0];
      if (kw == "names") {
        if (!inst.names.empty()) {
          parse_error(l.number, "duplicate 'names'");
        }
        if (l.tokens.size() != n + 1) {
          parse_error(l.number, detail::concat("expected ", n, " names"));
        }
        inst.names.assign(l.tokens.begin() + 1, l.tokens.end());
      } else if (kw == "congruence" || kw == "congruence-gen") {
        if (inst.congruence) {
          parse_error(l.number, "more than one congruence block");
        }
        header(l, 1);
        InstanceFile::CongruenceBlock block;
        std::size_t const             count = to_index(l.tokens[1], l.number);
        if (kw == "congruence") {
          block.num_classes = count;
          auto const& row   = next_row(n, "congruence");
          for (auto const& tok : row.tokens) {
            std::size_t const c = to_index(tok, row.number);
            if (c >= count) {
              parse_error(row.number, detail::concat("class id ", c, " out of range"));
            }
            block.class_of.push_back(c);
          }
        } else {
          block.generated = true;
          for (std::size_t p = 0; p < count; ++p) {
            auto const&       row = next_row(2, "congruence-gen");
            std::size_t const a   = to_index(row.tokens[0], row.number);
            std::size_t const b   = to_index(row.tokens[1], row.number);
            if (a >= n || b >= n) {
              parse_error(row.number, "generator pair out of range");
            }
            block.pairs.emplace_back(a, b);
          }
        }
        inst.congruence = std::move(block);
      } else if (kw == "action") {
        if (inst.action) {
          parse_error(l.number, "duplicate 'action'");
        }
        header(l, 1);
        InstanceFile::ActionBlock block;
        block.ground = to_index(l.tokens[1], l.number);
        for (std::size_t r = 0; r < n; ++r) {
          auto const&              row = next_row(block.ground, "action");
          std::vector<std::size_t> images;
          for (auto const& tok : row.tokens) {
            if (tok == "-") {
              images.push_back(PartialBijection::undefined);
              continue;
            }
            std::size_t const v = to_index(tok, row.number);
            if (v >= block.ground) {
              parse_error(row.number, detail::concat("point ", v, " out of range"));
            }
            images.push_back(v);
          }
          block.rows.push_back(std::move(images));
        }
        inst.action = std::move(block);
      } else if (kw == "subset") {
        if (inst.subset) {
          parse_error(l.number, "duplicate 'subset'");
        }
        std::vector<std::size_t> sub;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) {
          sub.push_back(to_index(l.tokens[t], l.number));
        }
        inst.subset = std::move(sub);
      } else {
        parse_error(l.number, "unknown keyword '" + kw + "'");
      }
    }
    return inst;
  }

  inline InstanceFile parse_instance_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("IOError", "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
  }

  inline std::string emit_instance(InstanceFile const& inst) {
    std::ostringstream out;
    auto               row = [&](auto const& values, auto&& fmt) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? " " : "") << fmt(values[i]);
      }
      out << "\n";
    };
    auto plain = [](std::size_t v) { return std::to_string(v); };

    out << "semigroup " << inst.table.size() << "\n";
    for (auto const& r : inst.table) {
      row(r, plain);
    }
    if (!inst.names.empty()) {
      out << "names";
      for (auto const& nm : inst.names) {
        out << " " << nm;
      }
      out << "\n";
    }
    if (auto const& c = inst.congruence) {
      if (c->generated) {
        out << "congruence-gen " << c->pairs.size() << "\n";
        for (auto [a, b] : c->pairs) {
          out << a << " " << b << "\n";
        }
      } else {
        out << "congruence " << c->num_classes << "\n";
        row(c->class_of, plain);
      }
    }
    if (auto const& a = inst.action) {
      out << "action " << a->ground << "\n";
      for (auto const& r : a->rows) {
        row(r, [](std::size_t v) {
          return v == PartialBijection::undefined ? std::string("-")
                                                  : std::to_string(v);
        });
      }
    }
    if (inst.subset) {
      out << "subset";
      for (std::size_t y : *inst.subset) {
        out << " " << y;
      }
      out << "\n";
    }
    return out.str();
  }

  inline InstanceFile instance_of(InverseSemigroup const& S) {
    InstanceFile inst;
    inst.table = S.table();
    inst.names = S.names();
    return inst;
  }

  inline InverseSemigroup semigroup_of(InstanceFile const& inst) {
    return InverseSemigroup::validate(inst.table, inst.names);
  }

  /// The congruence block resolved against S (validated or generated), or
  /// nullopt when the file has none.
  inline std::optional<Congruence> congruence_of(InstanceFile const&     inst,
                                                 InverseSemigroup const& S) {
    if (!inst.congruence) {
      return std::nullopt;
    }
    if (inst.congruence->generated) {
      return congruence_generated_by(S, inst.congruence->pairs);
    }
    return validate_congruence(S, inst.congruence->class_of);
  }

  inline std::vector<PartialBijection> action_maps(InstanceFile const& inst) {
    std::vector<PartialBijection> maps;
    for (auto const& r : inst.action->rows) {
      maps.push_back(PartialBijection::from_images(r));
    }
    return maps;
  }

  inline InstanceFile::ActionBlock action_block(
      std::vector<PartialBijection> const& maps, std::size_t ground) {
    InstanceFile::ActionBlock block;
    block.ground = ground;
    for (auto const& f : maps) {
      block.rows.push_back(f.images());
    }
    return block;
  }

  /// Built-in instances: "In" (I_n, 0 <= n <= 3), "chain" (C_k, 1 <= k <= 8),
  /// "cyclic" (Z_m, 1 <= m <= 8) and "vexample" (V with the congruence
  /// generated by (0, e) and its Munn action; the parameter is ignored).
  /// Throws `Error("OutOfRange")` or `Error("UnknownFamily")`.
  inline InstanceFile generate(std::string const& family, std::size_t param) {
    auto range = [&](std::size_t lo, std::size_t hi) {
      if (param < lo || param > hi) {
        throw Error("OutOfRange",
                    detail::concat(family, " takes a parameter in [", lo, ",",
                                   hi, "], got ", param),
                    {param});
      }
    };
    if (family == "In") {
      range(0, 3);
      return instance_of(symmetric_inverse_monoid(param));
    }
    if (family == "chain") {
      range(1, 8);
      return instance_of(chain(param));
    }
    if (family == "cyclic") {
      range(1, 8);
      return instance_of(cyclic_group(param));
    }
    if (family == "vexample") {
      auto                          inst = instance_of(example_semilattice());
      InstanceFile::CongruenceBlock rho;
      rho.generated   = true;
      rho.pairs       = {{0, 1}};
      inst.congruence = rho;
      inst.action     = InstanceFile::ActionBlock{
          3, {{0, PartialBijection::undefined, PartialBijection::undefined},
              {0, 1, PartialBijection::undefined},
              {0, PartialBijection::undefined, 2}}};
      return inst;
    }
    throw Error("UnknownFamily", "no built-in family named '" + family + "'");
  }

}  // namespace invsemi
