#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqft/errors.hpp"

namespace tqft {

/// Elementary two-dimensional pieces: cylinder, crossing cylinders, disk in
/// both orientations, pair of pants in both orientations.
enum class Generator { Id, Swap, Cup, Cap, Mul, Comul };

std::size_t generator_inputs(Generator g);
std::size_t generator_outputs(Generator g);
std::string_view generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  std::size_t line, col;
};

class WidthMismatch : public Error {
 public:
  WidthMismatch(std::size_t layer, std::size_t expected, std::size_t got)
      : Error("layer " + std::to_string(layer) + " consumes " + std::to_string(got) +
              " strands but " + std::to_string(expected) + " are available"),
        layer(layer),
        expected(expected),
        got(got) {}
  std::size_t layer;  // 1-based, as reported
  std::size_t expected, got;
};

class PatternMismatch : public Error {
 public:
  using Error::Error;
};

/// A surface presented as layers of elementary generators. Layers compose
/// top to bottom: the first layer consumes the word's inputs. Within a
/// layer, generators act left to right on consecutive strands.
struct CobordismWord {
  std::vector<std::vector<Generator>> layers;
  std::size_t in_width = 0;
  std::size_t out_width = 0;

  bool operator==(const CobordismWord&) const = default;
};

/// Validates the width chain and fills in the boundary widths.
CobordismWord make_word(std::vector<std::vector<Generator>> layers);

/// Grammar: word := layer (";" layer)*, layer := gen ("," gen)*,
/// gen := id | swap | cup | cap | mul | comul. Whitespace is insignificant.
CobordismWord parse_word(std::string_view text);

/// One layer per ";", generators joined by " , ".
std::string to_string(const CobordismWord& w);

/// Sum of the generator contributions: disks +1, pants -1, cylinders 0.
int euler_char(const CobordismWord& w);

struct OpenComponent {
  std::size_t genus = 0;
  std::vector<std::size_t> inputs;   // sorted indices into the word inputs
  std::vector<std::size_t> outputs;  // sorted indices into the word outputs
  bool operator==(const OpenComponent&) const = default;
};

struct ClosedComponent {
  std::size_t genus = 0;
  bool operator==(const ClosedComponent&) const = default;
};

/// Per-component genus and boundary assignment; the complete diffeomorphism
/// invariant of the underlying surface.
struct NormalForm {
  std::size_t in_width = 0;
  std::size_t out_width = 0;
  std::vector<OpenComponent> open_components;    // sorted by boundary indices
  std::vector<ClosedComponent> closed_components;  // sorted by genus
  bool operator==(const NormalForm&) const = default;
};

/// Earliest and latest (boundary, strand) positions at which a connected
/// component owns a live strand. Boundary b sits before layer b; boundary
/// layers.size() is the output boundary.
struct ComponentAnchor {
  std::size_t first_boundary = 0, first_strand = 0;
  std::size_t last_boundary = 0, last_strand = 0;
};

struct ComponentAnalysis {
  NormalForm nf;
  std::vector<ComponentAnchor> open_anchors;    // aligned with nf.open_components
  std::vector<ComponentAnchor> closed_anchors;  // aligned with nf.closed_components
};

ComponentAnalysis analyze_components(const CobordismWord& w);
NormalForm normal_form(const CobordismWord& w);

/// A local rewrite between Morse presentations of the same surface.
///  - InsertIdLayer / RemoveIdLayer: composition with an identity layer;
///    layer is the boundary (insert) or the layer index (remove).
///  - CancelCup*/CancelCap*: disk-pants cancellations; strand is the left
///    strand of the two-strand window between layer and layer+1.
///  - Slide*: the three presentations of the double pants
///    A = [id,comul];[mul,id], B = [mul];[comul], C = [comul,id];[id,mul];
///    strand is the left input strand of the pattern in layer.
struct CerfMove {
  enum class Kind {
    InsertIdLayer,
    RemoveIdLayer,
    CancelCupLeft,
    CancelCupRight,
    CancelCapLeft,
    CancelCapRight,
    SlideAToB,
    SlideBToA,
    SlideCToB,
    SlideBToC,
  };
  Kind kind;
  std::size_t layer = 0;
  std::size_t strand = 0;

  bool operator==(const CerfMove&) const = default;
};

std::string to_string(const CerfMove& m);

/// Applies the move; throws PatternMismatch when the local pattern is absent.
CobordismWord apply_cerf_move(const CobordismWord& w, const CerfMove& m);

/// Every applicable move instance, in deterministic order. Cancellations are
/// listed in the reducing direction only; slides in all four directions;
/// identity layers both inserted and removed.
std::vector<CerfMove> scan_cerf_moves(const CobordismWord& w);

struct RandomWordConfig {
  std::size_t max_width = 4;
  std::size_t max_layers = 6;
};

/// Deterministic function of the seed; always produces a valid word whose
/// boundary widths never exceed max_width.
CobordismWord random_word(std::uint64_t seed, const RandomWordConfig& cfg = {});

}  // namespace tqft
