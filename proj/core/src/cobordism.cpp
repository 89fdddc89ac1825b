#include "tqft/cobordism.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

namespace tqft {

std::size_t generator_inputs(Generator g) {
  switch (g) {
    case Generator::Id:
      return 1;
    case Generator::Swap:
      return 2;
    case Generator::Cup:
      return 0;
    case Generator::Cap:
      return 1;
    case Generator::Mul:
      return 2;
    case Generator::Comul:
      return 1;
  }
  return 0;
}

std::size_t generator_outputs(Generator g) {
  switch (g) {
    case Generator::Id:
      return 1;
    case Generator::Swap:
      return 2;
    case Generator::Cup:
      return 1;
    case Generator::Cap:
      return 0;
    case Generator::Mul:
      return 1;
    case Generator::Comul:
      return 2;
  }
  return 0;
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Id:
      return "id";
    case Generator::Swap:
      return "swap";
    case Generator::Cup:
      return "cup";
    case Generator::Cap:
      return "cap";
    case Generator::Mul:
      return "mul";
    case Generator::Comul:
      return "comul";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
  for (Generator g : {Generator::Id, Generator::Swap, Generator::Cup, Generator::Cap,
                      Generator::Mul, Generator::Comul}) {
    if (generator_name(g) == name) return g;
  }
  return std::nullopt;
}

namespace {

std::size_t layer_inputs(const std::vector<Generator>& layer) {
  std::size_t n = 0;
  for (auto g : layer) n += generator_inputs(g);
  return n;
}

std::size_t layer_outputs(const std::vector<Generator>& layer) {
  std::size_t n = 0;
  for (auto g : layer) n += generator_outputs(g);
  return n;
}

}  // namespace

CobordismWord make_word(std::vector<std::vector<Generator>> layers) {
  if (layers.empty()) throw Error("a word needs at least one layer");
  for (const auto& layer : layers) {
    if (layer.empty()) throw Error("a layer needs at least one generator");
  }
  CobordismWord w;
  w.in_width = layer_inputs(layers[0]);
  std::size_t width = w.in_width;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::size_t need = layer_inputs(layers[l]);
    if (need != width) throw WidthMismatch(l + 1, width, need);
    width = layer_outputs(layers[l]);
  }
  w.out_width = width;
  w.layers = std::move(layers);
  return w;
}

CobordismWord parse_word(std::string_view text) {
  std::vector<std::vector<Generator>> layers(1);
  std::size_t line = 1, col = 1;
  std::string ident;
  std::size_t ident_line = 1, ident_col = 1;
  bool expect_gen = true;

  auto flush_ident = [&]() {
    if (ident.empty()) return;
    auto g = generator_from_name(ident);
    if (!g) throw SyntaxError(ident_line, ident_col, "unknown generator \"" + ident + "\"");
    layers.back().push_back(*g);
    ident.clear();
    expect_gen = false;
  };

  for (char c : text) {
    if (c == '\n') {
      flush_ident();
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush_ident();
      ++col;
      continue;
    }
    if (c == ',' || c == ';') {
      flush_ident();
      if (expect_gen) throw SyntaxError(line, col, "expected a generator");
      if (c == ';') layers.emplace_back();
      expect_gen = true;
      ++col;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      if (!expect_gen && ident.empty()) throw SyntaxError(line, col, "expected \",\" or \";\"");
      if (ident.empty()) {
        ident_line = line;
        ident_col = col;
      }
      ident.push_back(c);
      ++col;
      continue;
    }
    throw SyntaxError(line, col, std::string("unexpected character \"") + c + "\"");
  }
  flush_ident();
  if (expect_gen) throw SyntaxError(line, col, "expected a generator");
  return make_word(std::move(layers));
}

std::string to_string(const CobordismWord& w) {
  std::string out;
  for (std::size_t l = 0; l < w.layers.size(); ++l) {
    if (l) out += " ; ";
    for (std::size_t g = 0; g < w.layers[l].size(); ++g) {
      if (g) out += " , ";
      out += generator_name(w.layers[l][g]);
    }
  }
  return out;
}

int euler_char(const CobordismWord& w) {
  int chi = 0;
  for (const auto& layer : w.layers) {
    for (auto g : layer) {
      switch (g) {
        case Generator::Cup:
        case Generator::Cap:
          ++chi;
          break;
        case Generator::Mul:
        case Generator::Comul:
          --chi;
          break;
        default:
          break;
      }
    }
  }
  return chi;
}

namespace {

/// Union-find over strand segments with per-class surface data.
class ComponentTracker {
 public:
  std::size_t fresh() {
    parent_.push_back(parent_.size());
    chi_.push_back(0);
    inputs_.emplace_back();
    outputs_.emplace_back();
    anchor_.push_back(ComponentAnchor{~0ull, 0, 0, 0});
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    chi_[a] += chi_[b];
    inputs_[a].insert(inputs_[a].end(), inputs_[b].begin(), inputs_[b].end());
    outputs_[a].insert(outputs_[a].end(), outputs_[b].begin(), outputs_[b].end());
    merge_anchor(anchor_[a], anchor_[b]);
  }

  void add_chi(std::size_t x, int d) { chi_[find(x)] += d; }
  void add_input(std::size_t x, std::size_t i) { inputs_[find(x)].push_back(i); }
  void add_output(std::size_t x, std::size_t i) { outputs_[find(x)].push_back(i); }

  void touch(std::size_t x, std::size_t boundary, std::size_t strand) {
    auto& a = anchor_[find(x)];
    if (a.first_boundary == ~0ull ||
        std::pair(boundary, strand) < std::pair(a.first_boundary, a.first_strand)) {
      a.first_boundary = boundary;
      a.first_strand = strand;
    }
    if (a.first_boundary == boundary && a.last_boundary <= boundary) {
      // keep last as the max position seen so far
    }
    if (std::pair(boundary, strand) >
        std::pair(a.last_boundary, a.last_strand)) {
      a.last_boundary = boundary;
      a.last_strand = strand;
    }
  }

  std::size_t size() const { return parent_.size(); }
  int chi(std::size_t root) const { return chi_[root]; }
  const std::vector<std::size_t>& inputs(std::size_t root) const { return inputs_[root]; }
  const std::vector<std::size_t>& outputs(std::size_t root) const { return outputs_[root]; }
  const ComponentAnchor& anchor(std::size_t root) const { return anchor_[root]; }

 private:
  static void merge_anchor(ComponentAnchor& a, const ComponentAnchor& b) {
    if (b.first_boundary != ~0ull &&
        (a.first_boundary == ~0ull ||
         std::pair(b.first_boundary, b.first_strand) < std::pair(a.first_boundary, a.first_strand))) {
      a.first_boundary = b.first_boundary;
      a.first_strand = b.first_strand;
    }
    if (std::pair(b.last_boundary, b.last_strand) > std::pair(a.last_boundary, a.last_strand)) {
      a.last_boundary = b.last_boundary;
      a.last_strand = b.last_strand;
    }
  }

  std::vector<std::size_t> parent_;
  std::vector<int> chi_;
  std::vector<std::vector<std::size_t>> inputs_;
  std::vector<std::vector<std::size_t>> outputs_;
  std::vector<ComponentAnchor> anchor_;
};

}  // namespace

ComponentAnalysis analyze_components(const CobordismWord& w) {
  ComponentTracker tracker;
  std::vector<std::size_t> strands;
  for (std::size_t i = 0; i < w.in_width; ++i) {
    std::size_t n = tracker.fresh();
    tracker.add_input(n, i);
    strands.push_back(n);
  }
  for (std::size_t s = 0; s < strands.size(); ++s) tracker.touch(strands[s], 0, s);

  for (std::size_t l = 0; l < w.layers.size(); ++l) {
    std::vector<std::size_t> next;
    std::size_t pos = 0;
    for (auto g : w.layers[l]) {
      switch (g) {
        case Generator::Id:
          next.push_back(strands[pos]);
          pos += 1;
          break;
        case Generator::Swap:
          next.push_back(strands[pos + 1]);
          next.push_back(strands[pos]);
          pos += 2;
          break;
        case Generator::Cup: {
          std::size_t n = tracker.fresh();
          tracker.add_chi(n, 1);
          next.push_back(n);
          break;
        }
        case Generator::Cap:
          tracker.add_chi(strands[pos], 1);
          pos += 1;
          break;
        case Generator::Mul:
          tracker.unite(strands[pos], strands[pos + 1]);
          tracker.add_chi(strands[pos], -1);
          next.push_back(strands[pos]);
          pos += 2;
          break;
        case Generator::Comul:
          tracker.add_chi(strands[pos], -1);
          next.push_back(strands[pos]);
          next.push_back(strands[pos]);
          pos += 1;
          break;
      }
    }
    assert(pos == strands.size());
    strands = std::move(next);
    for (std::size_t s = 0; s < strands.size(); ++s) tracker.touch(strands[s], l + 1, s);
  }
  for (std::size_t i = 0; i < strands.size(); ++i) tracker.add_output(strands[i], i);

  struct Entry {
    OpenComponent open;
    ClosedComponent closed;
    bool is_closed;
    ComponentAnchor anchor;
  };
  std::vector<Entry> entries;
  std::vector<bool> seen(tracker.size(), false);
  for (std::size_t n = 0; n < tracker.size(); ++n) {
    std::size_t root = tracker.find(n);
    if (seen[root]) continue;
    seen[root] = true;
    auto inputs = tracker.inputs(root);
    auto outputs = tracker.outputs(root);
    std::sort(inputs.begin(), inputs.end());
    std::sort(outputs.begin(), outputs.end());
    int chi = tracker.chi(root);
    int b = static_cast<int>(inputs.size() + outputs.size());
    int twice_genus = 2 - b - chi;
    assert(twice_genus >= 0 && twice_genus % 2 == 0);
    std::size_t genus = static_cast<std::size_t>(twice_genus / 2);

    Entry e;
    e.anchor = tracker.anchor(root);
    if (b == 0) {
      e.is_closed = true;
      e.closed.genus = genus;
    } else {
      e.is_closed = false;
      e.open.genus = genus;
      e.open.inputs = std::move(inputs);
      e.open.outputs = std::move(outputs);
    }
    entries.push_back(std::move(e));
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.is_closed != b.is_closed) return !a.is_closed;
    if (a.is_closed) {
      if (a.closed.genus != b.closed.genus) return a.closed.genus < b.closed.genus;
      return std::pair(a.anchor.first_boundary, a.anchor.first_strand) <
             std::pair(b.anchor.first_boundary, b.anchor.first_strand);
    }
    if (a.open.inputs != b.open.inputs) return a.open.inputs < b.open.inputs;
    return a.open.outputs < b.open.outputs;
  });

  ComponentAnalysis out;
  out.nf.in_width = w.in_width;
  out.nf.out_width = w.out_width;
  for (auto& e : entries) {
    if (e.is_closed) {
      out.nf.closed_components.push_back(e.closed);
      out.closed_anchors.push_back(e.anchor);
    } else {
      out.nf.open_components.push_back(std::move(e.open));
      out.open_anchors.push_back(e.anchor);
    }
  }
  return out;
}

NormalForm normal_form(const CobordismWord& w) { return analyze_components(w).nf; }

namespace {

struct PlacedGenerator {
  Generator gen;
  std::size_t index;   // position in the layer's generator list
  std::size_t in_off;  // first input strand
  std::size_t out_off;  // first output strand
};

std::vector<PlacedGenerator> place(const std::vector<Generator>& layer) {
  std::vector<PlacedGenerator> out;
  std::size_t in = 0, outp = 0;
  for (std::size_t i = 0; i < layer.size(); ++i) {
    out.push_back({layer[i], i, in, outp});
    in += generator_inputs(layer[i]);
    outp += generator_outputs(layer[i]);
  }
  return out;
}

const PlacedGenerator* find_by_output(const std::vector<PlacedGenerator>& placed, std::size_t off) {
  for (const auto& p : placed) {
    if (generator_outputs(p.gen) > 0 && p.out_off == off) return &p;
  }
  return nullptr;
}

const PlacedGenerator* find_by_input(const std::vector<PlacedGenerator>& placed, std::size_t off) {
  for (const auto& p : placed) {
    if (generator_inputs(p.gen) > 0 && p.in_off == off) return &p;
  }
  return nullptr;
}

std::vector<Generator> replace_gen(const std::vector<Generator>& layer, std::size_t index,
                                   std::vector<Generator> with) {
  std::vector<Generator> out(layer.begin(), layer.begin() + static_cast<std::ptrdiff_t>(index));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), layer.begin() + static_cast<std::ptrdiff_t>(index) + 1, layer.end());
  return out;
}

std::vector<Generator> replace_two(const std::vector<Generator>& layer, std::size_t index,
                                   std::vector<Generator> with) {
  std::vector<Generator> out(layer.begin(), layer.begin() + static_cast<std::ptrdiff_t>(index));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), layer.begin() + static_cast<std::ptrdiff_t>(index) + 2, layer.end());
  return out;
}

bool all_id(const std::vector<Generator>& layer) {
  return std::all_of(layer.begin(), layer.end(), [](Generator g) { return g == Generator::Id; });
}

[[noreturn]] void mismatch(const CerfMove& m) {
  throw PatternMismatch("no matching pattern for " + to_string(m));
}

CobordismWord prune_id_layers(std::vector<std::vector<Generator>> layers,
                              std::size_t first_touched) {
  // drop touched layers that collapsed to pure identities, keeping >= 1 layer
  for (std::size_t k = 0; k < 2; ++k) {
    std::size_t idx = first_touched + 1 - k;
    if (idx < layers.size() && layers.size() > 1 && all_id(layers[idx])) {
      layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(idx));
    }
  }
  return make_word(std::move(layers));
}

}  // namespace

std::string to_string(const CerfMove& m) {
  const char* names[] = {"insert-id-layer", "remove-id-layer", "cancel-cup-left",
                         "cancel-cup-right", "cancel-cap-left", "cancel-cap-right",
                         "slide-a-to-b",    "slide-b-to-a",    "slide-c-to-b",
                         "slide-b-to-c"};
  return std::string(names[static_cast<int>(m.kind)]) + "@(" + std::to_string(m.layer) + "," +
         std::to_string(m.strand) + ")";
}

CobordismWord apply_cerf_move(const CobordismWord& w, const CerfMove& m) {
  using Kind = CerfMove::Kind;
  auto layers = w.layers;

  switch (m.kind) {
    case Kind::InsertIdLayer: {
      if (m.layer > layers.size()) mismatch(m);
      std::size_t width = m.layer == 0 ? w.in_width : layer_outputs(layers[m.layer - 1]);
      if (width == 0) mismatch(m);
      layers.insert(layers.begin() + static_cast<std::ptrdiff_t>(m.layer),
                    std::vector<Generator>(width, Generator::Id));
      return make_word(std::move(layers));
    }
    case Kind::RemoveIdLayer: {
      if (m.layer >= layers.size() || layers.size() < 2 || !all_id(layers[m.layer])) mismatch(m);
      layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(m.layer));
      return make_word(std::move(layers));
    }
    case Kind::CancelCupLeft:
    case Kind::CancelCupRight: {
      if (m.layer + 1 >= layers.size()) mismatch(m);
      auto upper = place(layers[m.layer]);
      auto lower = place(layers[m.layer + 1]);
      std::size_t cup_off = m.kind == Kind::CancelCupLeft ? m.strand : m.strand + 1;
      const auto* cup = find_by_output(upper, cup_off);
      const auto* mul = find_by_input(lower, m.strand);
      if (!cup || cup->gen != Generator::Cup || !mul || mul->gen != Generator::Mul) mismatch(m);
      layers[m.layer] = replace_gen(layers[m.layer], cup->index, {});
      layers[m.layer + 1] = replace_gen(layers[m.layer + 1], mul->index, {Generator::Id});
      return prune_id_layers(std::move(layers), m.layer);
    }
    case Kind::CancelCapLeft:
    case Kind::CancelCapRight: {
      if (m.layer + 1 >= layers.size()) mismatch(m);
      auto upper = place(layers[m.layer]);
      auto lower = place(layers[m.layer + 1]);
      std::size_t cap_off = m.kind == Kind::CancelCapLeft ? m.strand : m.strand + 1;
      const auto* comul = find_by_output(upper, m.strand);
      const auto* cap = find_by_input(lower, cap_off);
      if (!comul || comul->gen != Generator::Comul || !cap || cap->gen != Generator::Cap) {
        mismatch(m);
      }
      layers[m.layer] = replace_gen(layers[m.layer], comul->index, {Generator::Id});
      layers[m.layer + 1] = replace_gen(layers[m.layer + 1], cap->index, {});
      return prune_id_layers(std::move(layers), m.layer);
    }
    case Kind::SlideBToA:
    case Kind::SlideBToC: {
      if (m.layer + 1 >= layers.size()) mismatch(m);
      auto upper = place(layers[m.layer]);
      auto lower = place(layers[m.layer + 1]);
      const auto* mul = find_by_input(upper, m.strand);
      if (!mul || mul->gen != Generator::Mul) mismatch(m);
      const auto* comul = find_by_input(lower, mul->out_off);
      if (!comul || comul->gen != Generator::Comul) mismatch(m);
      bool to_a = m.kind == Kind::SlideBToA;
      layers[m.layer] = replace_gen(
          layers[m.layer], mul->index,
          to_a ? std::vector<Generator>{Generator::Id, Generator::Comul}
               : std::vector<Generator>{Generator::Comul, Generator::Id});
      layers[m.layer + 1] = replace_gen(
          layers[m.layer + 1], comul->index,
          to_a ? std::vector<Generator>{Generator::Mul, Generator::Id}
               : std::vector<Generator>{Generator::Id, Generator::Mul});
      return make_word(std::move(layers));
    }
    case Kind::SlideAToB:
    case Kind::SlideCToB: {
      if (m.layer + 1 >= layers.size()) mismatch(m);
      auto upper = place(layers[m.layer]);
      auto lower = place(layers[m.layer + 1]);
      const auto* first = find_by_input(upper, m.strand);
      if (!first) mismatch(m);
      bool from_a = m.kind == Kind::SlideAToB;
      Generator want_first = from_a ? Generator::Id : Generator::Comul;
      Generator want_second = from_a ? Generator::Comul : Generator::Id;
      if (first->gen != want_first || first->index + 1 >= layers[m.layer].size() ||
          layers[m.layer][first->index + 1] != want_second) {
        mismatch(m);
      }
      std::size_t o = first->out_off;
      Generator want_lower_first = from_a ? Generator::Mul : Generator::Id;
      Generator want_lower_second = from_a ? Generator::Id : Generator::Mul;
      const auto* lower_first = find_by_input(lower, o);
      if (!lower_first || lower_first->gen != want_lower_first ||
          lower_first->index + 1 >= layers[m.layer + 1].size() ||
          layers[m.layer + 1][lower_first->index + 1] != want_lower_second) {
        mismatch(m);
      }
      layers[m.layer] = replace_two(layers[m.layer], first->index, {Generator::Mul});
      layers[m.layer + 1] = replace_two(layers[m.layer + 1], lower_first->index, {Generator::Comul});
      return make_word(std::move(layers));
    }
  }
  mismatch(m);
}

std::vector<CerfMove> scan_cerf_moves(const CobordismWord& w) {
  using Kind = CerfMove::Kind;
  std::vector<CerfMove> moves;
  const std::size_t nlayers = w.layers.size();

  for (std::size_t b = 0; b <= nlayers; ++b) {
    std::size_t width = b == 0 ? w.in_width : layer_outputs(w.layers[b - 1]);
    if (width >= 1) moves.push_back({Kind::InsertIdLayer, b, 0});
  }
  if (nlayers >= 2) {
    for (std::size_t l = 0; l < nlayers; ++l) {
      if (all_id(w.layers[l])) moves.push_back({Kind::RemoveIdLayer, l, 0});
    }
  }

  for (std::size_t l = 0; l + 1 < nlayers; ++l) {
    auto upper = place(w.layers[l]);
    auto lower = place(w.layers[l + 1]);
    for (const auto& p : upper) {
      if (p.gen == Generator::Cup) {
        std::size_t o = p.out_off;
        const auto* left = find_by_input(lower, o);
        if (left && left->gen == Generator::Mul) moves.push_back({Kind::CancelCupLeft, l, o});
        if (o >= 1) {
          const auto* right = find_by_input(lower, o - 1);
          if (right && right->gen == Generator::Mul) {
            moves.push_back({Kind::CancelCupRight, l, o - 1});
          }
        }
      }
      if (p.gen == Generator::Comul) {
        std::size_t o = p.out_off;
        const auto* left = find_by_input(lower, o);
        if (left && left->gen == Generator::Cap) moves.push_back({Kind::CancelCapLeft, l, o});
        const auto* right = find_by_input(lower, o + 1);
        if (right && right->gen == Generator::Cap) moves.push_back({Kind::CancelCapRight, l, o});
      }
      if (p.gen == Generator::Mul) {
        const auto* below = find_by_input(lower, p.out_off);
        if (below && below->gen == Generator::Comul) {
          moves.push_back({Kind::SlideBToA, l, p.in_off});
          moves.push_back({Kind::SlideBToC, l, p.in_off});
        }
      }
      // two-generator patterns A = [id, comul] and C = [comul, id]
      if (p.index + 1 < w.layers[l].size()) {
        Generator second = w.layers[l][p.index + 1];
        if (p.gen == Generator::Id && second == Generator::Comul) {
          const auto* lf = find_by_input(lower, p.out_off);
          if (lf && lf->gen == Generator::Mul && lf->index + 1 < w.layers[l + 1].size() &&
              w.layers[l + 1][lf->index + 1] == Generator::Id) {
            moves.push_back({Kind::SlideAToB, l, p.in_off});
          }
        }
        if (p.gen == Generator::Comul && second == Generator::Id) {
          const auto* lf = find_by_input(lower, p.out_off);
          if (lf && lf->gen == Generator::Id && lf->index + 1 < w.layers[l + 1].size() &&
              w.layers[l + 1][lf->index + 1] == Generator::Mul) {
            moves.push_back({Kind::SlideCToB, l, p.in_off});
          }
        }
      }
    }
  }
  return moves;
}

CobordismWord random_word(std::uint64_t seed, const RandomWordConfig& cfg) {
  if (cfg.max_width < 1) throw Error("max_width must be at least 1");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::size_t nlayers = 1 + pick(cfg.max_layers);
  std::size_t width = pick(cfg.max_width + 1);

  std::vector<std::vector<Generator>> layers;
  for (std::size_t l = 0; l < nlayers; ++l) {
    std::vector<Generator> layer;
    std::size_t remaining = width;
    std::size_t out = 0;
    while (remaining > 0 || layer.empty()) {
      std::vector<Generator> candidates;
      auto add = [&](Generator g) {
        if (generator_inputs(g) <= remaining && out + generator_outputs(g) <= cfg.max_width) {
          candidates.push_back(g);
        }
      };
      add(Generator::Id);
      add(Generator::Cap);
      add(Generator::Comul);
      add(Generator::Swap);
      add(Generator::Mul);
      add(Generator::Cup);
      if (candidates.empty()) {
        // out budget exhausted; caps always fit
        candidates.push_back(Generator::Cap);
      }
      Generator g = candidates[pick(candidates.size())];
      layer.push_back(g);
      remaining -= generator_inputs(g);
      out += generator_outputs(g);
    }
    // occasional trailing disks
    while (out < cfg.max_width && rng() % 4 == 0) {
      layer.push_back(Generator::Cup);
      ++out;
    }
    width = out;
    layers.push_back(std::move(layer));
  }
  return make_word(std::move(layers));
}

}  // namespace tqft
