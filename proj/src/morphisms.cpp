#include "pcg/morphisms.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>
#include <sstream>

#include "pcg/errors.hpp"
#include "pcg/parallel.hpp"

namespace pcg {

  namespace {

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    // Replaces standalone "1" tokens by spaces.
    std::string drop_identity_tokens(std::string_view body) {
      std::string        out;
      std::istringstream in{std::string(body)};
      std::string        token;
      while (in >> token) {
        if (token != "1") {
          out += token;
          out += ' ';
        }
      }
      return out;
    }

  }  // namespace

  GeneratorMap parse_map(Graph const& source, Graph const& target,
                         std::string_view text) {
    std::vector<std::optional<Word>> images(source.size());
    std::size_t                      line_no = 0, pos = 0;
    while (pos < text.size()) {
      auto const end = std::min(text.find('\n', pos), text.size());
      auto       line = text.substr(pos, end - pos);
      pos             = end + 1;
      ++line_no;
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) {
        continue;
      }
      auto const arrow = line.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError(line_no, "expected \"name -> word\"");
      }
      auto const name = trim(line.substr(0, arrow));
      auto const x    = source.find(name);
      if (!x) {
        throw ParseError(line_no, "unknown source generator \""
                                      + std::string(name) + "\"");
      }
      if (images[*x]) {
        throw ParseError(line_no, "duplicate line for \"" + std::string(name)
                                      + "\"");
      }
      try {
        images[*x] = parse_word(target, drop_identity_tokens(line.substr(arrow + 2)));
      } catch (ParseError const& e) {
        throw ParseError(line_no, e.what());
      }
    }
    GeneratorMap m{source, target, {}};
    for (std::size_t x = 0; x < source.size(); ++x) {
      if (!images[x]) {
        throw ParseError(0, "no image given for generator \"" + source.name(x)
                                + "\"");
      }
      m.images.push_back(std::move(*images[x]));
    }
    return m;
  }

  std::string format_map(GeneratorMap const& m) {
    std::ostringstream out;
    for (std::size_t x = 0; x < m.source.size(); ++x) {
      out << m.source.name(x) << " -> ";
      out << (m.images[x].empty() ? std::string("1")
                                  : format_word(m.target, m.images[x]));
      out << '\n';
    }
    return out.str();
  }

  Word apply_map(GeneratorMap const& m, Word const& w) {
    Word out;
    for (auto const& l : w) {
      auto const& image = m.images.at(l.base);
      if (l.inverse) {
        auto inv = inverse(image);
        out.insert(out.end(), inv.begin(), inv.end());
      } else {
        out.insert(out.end(), image.begin(), image.end());
      }
    }
    return out;
  }

  bool HomomorphismReport::holds() const {
    return !first_failure().has_value();
  }

  std::optional<std::size_t> HomomorphismReport::first_failure() const {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (!relators[i].trivial()) {
        return i;
      }
    }
    return std::nullopt;
  }

  HomomorphismReport check_homomorphism(GeneratorMap const& m) {
    HomomorphismReport report;
    for (auto const& [x, y] : m.source.edges()) {
      RelatorCheck check;
      check.x       = x;
      check.y       = y;
      check.image   = apply_map(m, commutator(generator_word(x), generator_word(y)));
      check.reduced = normal_form(m.target, check.image);
      report.relators.push_back(std::move(check));
    }
    return report;
  }

  bool is_homomorphism(GeneratorMap const& m) {
    return check_homomorphism(m).holds();
  }

  KernelSearchResult kernel_search(GeneratorMap const& m, std::size_t max_len,
                                   std::optional<VertexSet> const& restrict_to) {
    auto const report = check_homomorphism(m);
    if (auto bad = report.first_failure()) {
      auto const& r = report.relators[*bad];
      throw NotHomomorphismError("relator [" + m.source.name(r.x) + ","
                                 + m.source.name(r.y)
                                 + "] does not map to the identity");
    }
    auto const letters
        = restrict_to ? letters_over(*restrict_to) : letters_over(m.source);
    for (auto const& l : letters) {
      if (l.base >= m.source.size()) {
        throw InvalidArgument("restriction names a vertex outside the source");
      }
    }

    KernelSearchResult result;
    result.max_len = max_len;
    std::vector<Word> level{Word{}};
    for (std::size_t n = 1; n <= max_len; ++n) {
      // Extend every normal form of length n - 1; shards keep their order.
      std::vector<std::vector<Word>> shards(level.size());
      parallel_for(level.size(), [&](std::size_t i) {
        shards[i] = normal_form_successors(m.source, level[i], letters);
      });
      std::vector<Word> next;
      for (auto& shard : shards) {
        std::move(shard.begin(), shard.end(), std::back_inserter(next));
      }
      level = std::move(next);
      if (level.empty()) {
        break;
      }
      result.elements_per_length.push_back(level.size());

      std::vector<char> in_kernel(level.size(), 0);
      parallel_for(level.size(), [&](std::size_t i) {
        in_kernel[i] = is_trivial(m.target, apply_map(m, level[i])) ? 1 : 0;
      });
      auto hit = std::find(in_kernel.begin(), in_kernel.end(), 1);
      if (hit != in_kernel.end()) {
        result.witness = level[static_cast<std::size_t>(hit - in_kernel.begin())];
        return result;
      }
    }
    return result;
  }

  bool parabolic_restriction_injective(GeneratorMap const& m,
                                       VertexSet const&    ys,
                                       std::size_t         max_len) {
    return !kernel_search(m, max_len, ys).witness.has_value();
  }

  bool occurs_only_in_pairs(Word const& w, std::size_t first,
                            std::size_t second) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].base != first) {
        continue;
      }
      bool const paired
          = w[i].inverse
                ? (i > 0 && w[i - 1].base == second && w[i - 1].inverse)
                : (i + 1 < w.size() && w[i + 1].base == second
                   && !w[i + 1].inverse);
      if (!paired) {
        return false;
      }
    }
    return true;
  }

}  // namespace pcg
