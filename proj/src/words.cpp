#include "qsg/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsg {

FactorSpec FactorSpec::infinite_cyclic(std::string label) {
  FactorSpec f;
  f.kind = Kind::InfiniteCyclic;
  f.label = std::move(label);
  return f;
}

FactorSpec FactorSpec::finite_cyclic(int order, std::string label) {
  if (order < 2) throw std::invalid_argument("finite cyclic factor needs order >= 2");
  FactorSpec f;
  f.kind = Kind::FiniteCyclic;
  f.cyclic_order = order;
  f.label = std::move(label);
  return f;
}

FactorSpec FactorSpec::from_table(FiniteGroupData table, std::vector<int> lengths, std::string label) {
  if (static_cast<int>(lengths.size()) != table.order)
    throw std::invalid_argument("length table must cover the group");
  if (lengths[table.identity] != 0) throw std::invalid_argument("l(e) must be 0");
  for (int x = 0; x < table.order; ++x) {
    if (x != table.identity && lengths[x] <= 0)
      throw std::invalid_argument("non-identity elements need positive length");
    if (lengths[x] != lengths[table.inverse[x]]) throw std::invalid_argument("l(g) must equal l(g^-1)");
  }
  FactorSpec f;
  f.kind = Kind::Table;
  f.table = std::move(table);
  f.table_length = std::move(lengths);
  f.label = std::move(label);
  return f;
}

bool FactorSpec::is_identity(long e) const {
  switch (kind) {
    case Kind::InfiniteCyclic:
      return e == 0;
    case Kind::FiniteCyclic:
      return normalize(e) == 0;
    case Kind::Table:
      return e == table.identity;
  }
  return true;
}

long FactorSpec::normalize(long e) const {
  if (kind != Kind::FiniteCyclic) return e;
  // shortest representative, ties to the positive one: range (-m/2, m/2]
  long m = cyclic_order;
  long r = ((e % m) + m) % m;
  return r * 2 > m ? r - m : r;
}

long FactorSpec::multiply(long a, long b) const {
  switch (kind) {
    case Kind::InfiniteCyclic:
      return a + b;
    case Kind::FiniteCyclic:
      return normalize(a + b);
    case Kind::Table:
      return table.mult[a][b];
  }
  return 0;
}

long FactorSpec::invert(long e) const {
  switch (kind) {
    case Kind::InfiniteCyclic:
      return -e;
    case Kind::FiniteCyclic:
      return normalize(-e);
    case Kind::Table:
      return table.inverse[e];
  }
  return 0;
}

int FactorSpec::length(long e) const {
  switch (kind) {
    case Kind::InfiniteCyclic:
      return static_cast<int>(e < 0 ? -e : e);
    case Kind::FiniteCyclic: {
      const long n = normalize(e);
      return static_cast<int>(n < 0 ? -n : n);
    }
    case Kind::Table:
      return table_length[e];
  }
  return 0;
}

std::vector<long> FactorSpec::elements_up_to(int bound) const {
  std::vector<long> out;
  switch (kind) {
    case Kind::InfiniteCyclic:
      for (long e = -bound; e <= bound; ++e)
        if (e != 0) out.push_back(e);
      break;
    case Kind::FiniteCyclic:
      for (long r = 1; r < cyclic_order; ++r) {
        const long e = normalize(r);
        if (length(e) <= bound) out.push_back(e);
      }
      break;
    case Kind::Table:
      for (int x = 0; x < table.order; ++x)
        if (x != table.identity && table_length[x] <= bound) out.push_back(x);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FreeProductWord reduce(const Factors& factors, std::vector<Block> raw) {
  std::vector<Block> out;  // kept reduced; merging into the top cascades
  for (auto block : raw) {
    if (block.factor < 0 || block.factor >= static_cast<int>(factors.size()))
      throw std::invalid_argument("invalid factor index in word");
    const auto& f = factors[block.factor];
    if (f.kind == FactorSpec::Kind::Table && (block.element < 0 || block.element >= f.table.order))
      throw std::invalid_argument("invalid factor element in word");
    block.element = f.normalize(block.element);
    if (f.is_identity(block.element)) continue;
    if (!out.empty() && out.back().factor == block.factor) {
      const long merged = f.multiply(out.back().element, block.element);
      out.pop_back();
      if (!f.is_identity(merged)) out.push_back({block.factor, merged});
      // merging to the identity exposes the block below, which the next
      // incoming block is compared against
    } else {
      out.push_back(block);
    }
  }
  return FreeProductWord{std::move(out)};
}

FreeProductWord multiply(const Factors& factors, const FreeProductWord& a, const FreeProductWord& b) {
  std::vector<Block> raw = a.blocks;
  raw.insert(raw.end(), b.blocks.begin(), b.blocks.end());
  return reduce(factors, std::move(raw));
}

FreeProductWord inverse(const Factors& factors, const FreeProductWord& w) {
  std::vector<Block> raw;
  for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it)
    raw.push_back({it->factor, factors[it->factor].invert(it->element)});
  return reduce(factors, std::move(raw));
}

int word_length(const Factors& factors, const FreeProductWord& w) {
  int total = 0;
  for (const auto& b : w.blocks) total += factors[b.factor].length(b.element);
  return total;
}

int block_length(const FreeProductWord& w) { return static_cast<int>(w.blocks.size()); }

std::vector<int> shape(const Factors& factors, const FreeProductWord& w) {
  std::vector<int> s;
  int run = 0;
  for (const auto& b : w.blocks) {
    run += factors[b.factor].length(b.element);
    s.push_back(run);
  }
  return s;
}

namespace {

void extend(const Factors& factors, int radius, std::vector<Block>& stack, std::vector<FreeProductWord>& out,
            int used) {
  out.push_back(FreeProductWord{stack});
  if (used == radius) return;
  for (int f = 0; f < static_cast<int>(factors.size()); ++f) {
    if (!stack.empty() && stack.back().factor == f) continue;
    for (long e : factors[f].elements_up_to(radius - used)) {
      stack.push_back({f, e});
      extend(factors, radius, stack, out, used + factors[f].length(e));
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<FreeProductWord> enumerate_ball(const Factors& factors, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<Block> stack;
  std::vector<FreeProductWord> out;
  extend(factors, radius, stack, out, 0);
  std::sort(out.begin(), out.end(), [&](const FreeProductWord& a, const FreeProductWord& b) {
    const int la = word_length(factors, a), lb = word_length(factors, b);
    if (la != lb) return la < lb;
    std::vector<int> fa, fb;
    for (const auto& x : a.blocks) fa.push_back(x.factor);
    for (const auto& x : b.blocks) fb.push_back(x.factor);
    if (fa != fb) return fa < fb;
    std::vector<long> ea, eb;
    for (const auto& x : a.blocks) ea.push_back(x.element);
    for (const auto& x : b.blocks) eb.push_back(x.element);
    return ea < eb;
  });
  return out;
}

std::map<std::vector<int>, std::vector<FreeProductWord>> partition_by(const Factors& factors,
                                                                      const std::vector<FreeProductWord>& words,
                                                                      PartitionMode mode) {
  std::map<std::vector<int>, std::vector<FreeProductWord>> out;
  for (const auto& w : words) {
    std::vector<int> key;
    switch (mode) {
      case PartitionMode::Length:
        key = {word_length(factors, w)};
        break;
      case PartitionMode::LengthAndBlock:
        key = {word_length(factors, w), block_length(w)};
        break;
      case PartitionMode::Shape:
        key = shape(factors, w);
        break;
    }
    out[key].push_back(w);
  }
  return out;
}

std::string format_word(const Factors& factors, const FreeProductWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const auto& b : w.blocks) {
    if (!out.empty()) out += ".";
    const auto& f = factors[b.factor];
    if (f.kind == FactorSpec::Kind::Table) {
      out += f.label + ":" + std::to_string(b.element);
    } else {
      out += f.label;
      if (b.element != 1) out += "^" + std::to_string(b.element);
    }
  }
  return out;
}

FreeProductWord parse_word(const Factors& factors, const std::string& text) {
  if (text == "e" || text.empty()) return {};
  std::vector<Block> raw;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t dot = text.find('.', pos);
    if (dot == std::string::npos) dot = text.size();
    const std::string token = text.substr(pos, dot - pos);
    size_t mark = token.find_first_of("^:");
    const std::string label = token.substr(0, mark);
    long element = 1;
    if (mark != std::string::npos) element = std::stol(token.substr(mark + 1));
    int factor = -1;
    for (size_t i = 0; i < factors.size(); ++i)
      if (factors[i].label == label) factor = static_cast<int>(i);
    if (factor < 0) throw std::invalid_argument("unknown factor label: " + label);
    raw.push_back({factor, element});
    pos = dot + 1;
  }
  return reduce(factors, std::move(raw));
}

}  // namespace qsg
