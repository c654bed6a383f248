#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearring/params.hpp"
#include "nearring/table.hpp"

namespace nearring {

/// Malformed map file or map data.
class MapFormatError : public Error {
 public:
  using Error::Error;
};

/// Dense tables alpha, beta, gamma indexed by rank, defining x*b for every x:
///   x*b = a*alpha(x) + b*beta(x) + c*gamma(x).
/// Together with left distributivity and x*a = x this fixes the whole
/// multiplication.
class MapTriple {
 public:
  /// Throws MapFormatError when a table has the wrong length or a value is
  /// outside its residue range. The forced identity row is not checked here;
  /// see forced_row_violation().
  MapTriple(GroupParams params, std::vector<Residue> alpha, std::vector<Residue> beta,
            std::vector<Residue> gamma);

  const GroupParams& params() const { return params_; }
  const std::vector<Residue>& alpha() const { return alpha_; }
  const std::vector<Residue>& beta() const { return beta_; }
  const std::vector<Residue>& gamma() const { return gamma_; }

  /// (alpha(x), beta(x), gamma(x)) for the element of rank k.
  Element row(Rank k) const { return {alpha_[k], beta_[k], gamma_[k]}; }

  /// Description of the problem when the row at a = (1,0,0) is not (0,1,0).
  std::optional<std::string> forced_row_violation() const;

  friend bool operator==(const MapTriple&, const MapTriple&) = default;

 private:
  GroupParams params_;
  std::vector<Residue> alpha_, beta_, gamma_;
};

/// alpha = 0, beta(x) = x1 mod p^n, gamma = 0.
MapTriple canonical_maps(const GroupParams& g);

/// x*b as an element.
Element xb(const MapTriple& maps, const Element& x);

/// Product x*y given the row (alpha(x), beta(x), gamma(x)) of x.
Element mul_with_row(const GroupParams& g, const Element& x_row, const Element& x, const Element& y);

/// Product x*y by the closed coordinate formula.
Element mul(const MapTriple& maps, const Element& x, const Element& y);

/// Right-hand sides of the row congruences for xy: the row that associativity
/// against b forces on the product, i.e. x*(y*b).
Element product_row(const GroupParams& g, const Element& x_row, const Element& x,
                    const Element& y_row);

/// y -> x*y over all y, by rank.
std::vector<Rank> left_mul_table(const MapTriple& maps, const Element& x);

OperationTable mul_table(const MapTriple& maps, std::size_t bound = kDefaultTableBound);

/// {"params":{"p":..,"m":..,"n":..,"d":..},"alpha":[..],"beta":[..],"gamma":[..]}
/// followed by a newline.
std::string to_json(const MapTriple& maps);

/// Throws MapFormatError (with byte offset for syntax errors) or ParamError.
MapTriple map_triple_from_json(std::string_view text);

MapTriple load_map_triple(const std::string& path);
void save_map_triple(const MapTriple& maps, const std::string& path);

}  // namespace nearring
