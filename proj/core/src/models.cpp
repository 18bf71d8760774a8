#include "zinbiel/models.hpp"

#include <charconv>
#include <map>

namespace zinbiel {

AlgebraTable trunc_integration(std::size_t n, Orientation orientation) {
  const std::size_t dim = n + 1;
  Tensor3 c(dim, dim, dim);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (orientation == Orientation::Right) {
        if (i + j + 1 <= n) {
          c.set({i, j, i + j + 1}, Scalar(1, static_cast<long>(i + 1)));
        }
      } else if (i >= 1 && i + j <= n) {
        c.set({i, j, i + j}, Scalar(static_cast<long>(i), static_cast<long>(i + j)));
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k <= n; ++k) {
    labels.push_back(k == 0 ? "1" : (k == 1 ? "X" : "X^" + std::to_string(k)));
  }
  return AlgebraTable(dim, std::move(c), std::move(labels));
}

namespace {

void shuffles(const std::string& u, const std::string& v, std::string& prefix,
              std::map<std::string, long>& out) {
  if (u.empty() || v.empty()) {
    ++out[prefix + u + v];
    return;
  }
  prefix.push_back(u.front());
  shuffles(u.substr(1), v, prefix, out);
  prefix.back() = v.front();
  shuffles(u, v.substr(1), prefix, out);
  prefix.pop_back();
}

}  // namespace

AlgebraTable free_halfshuffle(std::size_t letters, std::size_t max_len) {
  if (letters == 0 || letters > 26) throw InputError("free model needs 1..26 letters");
  if (max_len == 0) throw InputError("free model needs max_len >= 1");

  std::vector<std::string> words;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (std::size_t l = 0; l < letters; ++l) next.push_back(w + static_cast<char>('a' + l));
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  const std::size_t dim = words.size();
  Tensor3 c(dim, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::string& u = words[i];
      const std::string& v = words[j];
      if (u.size() + v.size() > max_len) continue;
      std::map<std::string, long> terms;
      std::string prefix;
      shuffles(u, v.substr(0, v.size() - 1), prefix, terms);
      for (const auto& [w, count] : terms) {
        c.add_to({i, j, index.at(w + v.back())}, Scalar(count));
      }
    }
  }
  return AlgebraTable(dim, std::move(c), std::move(words));
}

AlgebraTable unit_idempotent() {
  Tensor3 c(1, 1, 1);
  c.set({0, 0, 0}, Scalar(1));
  return AlgebraTable(1, std::move(c));
}

std::vector<AlgebraTable> trivial_models() {
  std::vector<AlgebraTable> out;
  for (std::size_t d = 0; d <= 3; ++d) out.push_back(AlgebraTable::zero(d));
  out.push_back(unit_idempotent());
  return out;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(const std::string& s, const std::string& spec) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InputError("bad number '" + s + "' in model spec '" + spec + "'");
  }
  return value;
}

}  // namespace

ModelSpec parse_model_spec(const std::string& text) {
  const auto parts = split(text, ':');
  ModelSpec spec;
  spec.text = text;
  spec.family = parts.front();
  if (spec.family == "trunc-int" && parts.size() == 3) {
    spec.orientation = parse_orientation(parts[1]);
    spec.a = parse_count(parts[2], text);
  } else if (spec.family == "free" && parts.size() == 3) {
    spec.a = parse_count(parts[1], text);
    spec.b = parse_count(parts[2], text);
    if (spec.a == 0 || spec.b == 0) throw InputError("free model needs K >= 1 and M >= 1");
  } else if (spec.family == "zero" && parts.size() == 2) {
    spec.a = parse_count(parts[1], text);
  } else {
    throw InputError("unknown model spec '" + text +
                     "' (expected trunc-int:right:N, trunc-int:left:N, free:K:M or zero:N)");
  }
  return spec;
}

AlgebraTable build_model(const ModelSpec& spec) {
  if (spec.family == "trunc-int") return trunc_integration(spec.a, spec.orientation);
  if (spec.family == "free") return free_halfshuffle(spec.a, spec.b);
  return AlgebraTable::zero(spec.a);
}

}  // namespace zinbiel
