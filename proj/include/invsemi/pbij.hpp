#pragma once

// Partial bijections of {0, ..., m - 1}: the elements of the symmetric
// inverse monoid I(X), their order, joins, and membership in the inverse
// semigroup of isomorphisms between order ideals of a semilattice.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/core.hpp"
#include "invsemi/error.hpp"

namespace invsemi {

  class PartialBijection {
   public:
    static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

    PartialBijection() = default;

    // The empty map on a ground set of the given size.
    explicit PartialBijection(std::size_t ground) : image_(ground, undefined) {}

    /// Throws `Error("BadImage")` for out-of-range images and
    /// `Error("NotInjective", ..., {x, y})` if x != y share an image.
    static PartialBijection from_images(std::vector<std::size_t> image) {
      std::size_t const        m = image.size();
      std::vector<std::size_t> preimage(m, undefined);
      for (std::size_t x = 0; x < m; ++x) {
        if (image[x] == undefined) {
          continue;
        }
        if (image[x] >= m) {
          throw Error("BadImage",
                      detail::concat("image of ", x, " is ", image[x],
                                     ", outside a ground set of size ", m),
                      {x});
        }
        if (preimage[image[x]] != undefined) {
          throw Error("NotInjective",
                      detail::concat(preimage[image[x]], " and ", x,
                                     " both map to ", image[x]),
                      {preimage[image[x]], x});
        }
        preimage[image[x]] = x;
      }
      PartialBijection f;
      f.image_ = std::move(image);
      return f;
    }

    static PartialBijection identity(std::size_t ground) {
      PartialBijection f(ground);
      for (std::size_t x = 0; x < ground; ++x) {
        f.image_[x] = x;
      }
      return f;
    }

    static PartialBijection identity_on(std::size_t                  ground,
                                        std::span<std::size_t const> points) {
      PartialBijection f(ground);
      for (std::size_t x : points) {
        f.image_[x] = x;
      }
      return f;
    }

    std::size_t ground() const noexcept {
      return image_.size();
    }

    bool defined(std::size_t x) const {
      return image_[x] != undefined;
    }

    // Precondition: defined(x).
    std::size_t operator()(std::size_t x) const {
      return image_[x];
    }

    // undefined when x is not in the domain
    std::size_t image_of(std::size_t x) const {
      return image_[x];
    }

    std::vector<std::size_t> const& images() const noexcept {
      return image_;
    }

    std::vector<std::size_t> domain() const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < ground(); ++x) {
        if (defined(x)) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<std::size_t> range() const {
      std::vector<bool> hit(ground(), false);
      for (std::size_t y : image_) {
        if (y != undefined) {
          hit[y] = true;
        }
      }
      std::vector<std::size_t> out;
      for (std::size_t y = 0; y < ground(); ++y) {
        if (hit[y]) {
          out.push_back(y);
        }
      }
      return out;
    }

    bool in_range(std::size_t y) const {
      for (std::size_t v : image_) {
        if (v == y) {
          return true;
        }
      }
      return false;
    }

    std::size_t domain_size() const {
      std::size_t k = 0;
      for (std::size_t y : image_) {
        k += (y != undefined);
      }
      return k;
    }

    bool empty() const {
      return domain_size() == 0;
    }

    bool is_idempotent() const {
      for (std::size_t x = 0; x < ground(); ++x) {
        if (defined(x) && image_[x] != x) {
          return false;
        }
      }
      return true;
    }

    PartialBijection inverse() const {
      PartialBijection g(ground());
      for (std::size_t x = 0; x < ground(); ++x) {
        if (defined(x)) {
          g.image_[image_[x]] = x;
        }
      }
      return g;
    }

    friend bool operator==(PartialBijection const&, PartialBijection const&)
        = default;
    friend auto operator<=>(PartialBijection const&, PartialBijection const&)
        = default;

   private:
    std::vector<std::size_t> image_;
  };

  namespace detail {
    inline void check_ground(PartialBijection const& f,
                             PartialBijection const& g) {
      if (f.ground() != g.ground()) {
        throw Error("GroundMismatch",
                    concat("ground sizes ", f.ground(), " and ", g.ground()));
      }
    }
  }  // namespace detail

  /// f o g: first g, then f. Defined on g^-1(dom f n ran g).
  inline PartialBijection compose(PartialBijection const& f,
                                  PartialBijection const& g) {
    detail::check_ground(f, g);
    std::vector<std::size_t> image(g.ground(), PartialBijection::undefined);
    for (std::size_t x = 0; x < g.ground(); ++x) {
      if (g.defined(x) && f.defined(g(x))) {
        image[x] = f(g(x));
      }
    }
    return PartialBijection::from_images(std::move(image));
  }

  // f <= g in I(X) iff f is contained in g as a set of pairs.
  inline bool leq(PartialBijection const& f, PartialBijection const& g) {
    detail::check_ground(f, g);
    for (std::size_t x = 0; x < f.ground(); ++x) {
      if (f.defined(x) && f(x) != g.image_of(x)) {
        return false;
      }
    }
    return true;
  }

  /// Why a union of partial bijections is not itself one.
  struct JoinConflict {
    enum class Kind { two_images, two_preimages };
    Kind kind;
    // two_images: `point` is sent to both `first` and `second`.
    // two_preimages: `first` and `second` are both sent to `point`.
    std::size_t point;
    std::size_t first;
    std::size_t second;

    std::string describe() const {
      if (kind == Kind::two_images) {
        return detail::concat(point, " has two images ", first, " and ",
                              second);
      }
      return detail::concat(first, " and ", second, " both map to ", point);
    }
  };

  struct JoinOutcome {
    std::optional<PartialBijection> value;
    std::optional<JoinConflict>     conflict;

    explicit operator bool() const noexcept {
      return value.has_value();
    }
  };

  /// The join of a family in I(X): it exists iff the union is a partial
  /// bijection, and then it is the union. The empty family joins to the
  /// empty map on `ground` points.
  inline JoinOutcome try_join(std::span<PartialBijection const> family,
                              std::size_t                       ground) {
    constexpr auto           undefined = PartialBijection::undefined;
    std::vector<std::size_t> image(ground, undefined);
    std::vector<std::size_t> preimage(ground, undefined);
    for (auto const& f : family) {
      if (f.ground() != ground) {
        throw Error("GroundMismatch",
                    detail::concat("ground sizes ", f.ground(), " and ",
                                   ground));
      }
      for (std::size_t x = 0; x < ground; ++x) {
        if (!f.defined(x)) {
          continue;
        }
        std::size_t const y = f(x);
        if (image[x] != undefined && image[x] != y) {
          return {std::nullopt,
                  JoinConflict{JoinConflict::Kind::two_images, x,
                               std::min(image[x], y), std::max(image[x], y)}};
        }
        if (preimage[y] != undefined && preimage[y] != x) {
          return {std::nullopt,
                  JoinConflict{JoinConflict::Kind::two_preimages, y,
                               std::min(preimage[y], x),
                               std::max(preimage[y], x)}};
        }
        image[x]    = y;
        preimage[y] = x;
      }
    }
    return {PartialBijection::from_images(std::move(image)), std::nullopt};
  }

  /// As `try_join`, but throws `Error("JoinFails")` with witness
  /// {point, first, second}.
  inline PartialBijection join(std::span<PartialBijection const> family,
                               std::size_t                       ground) {
    auto out = try_join(family, ground);
    if (!out) {
      auto const& c = *out.conflict;
      throw Error("JoinFails", c.describe(), {c.point, c.first, c.second});
    }
    return std::move(*out.value);
  }

  inline PartialBijection join(std::span<PartialBijection const> family) {
    if (family.empty()) {
      throw Error("GroundMismatch", "cannot infer ground of an empty join");
    }
    return join(family, family.front().ground());
  }

  /// True iff dom f and ran f are order ideals of E and f is an order
  /// isomorphism between them, i.e. f belongs to Sigma(E).
  inline bool is_ideal_iso(PartialBijection const& f, Semilattice const& E) {
    if (f.ground() != E.size()) {
      return false;
    }
    std::vector<bool> in_dom(E.size(), false), in_ran(E.size(), false);
    for (std::size_t x = 0; x < E.size(); ++x) {
      if (f.defined(x)) {
        in_dom[x]    = true;
        in_ran[f(x)] = true;
      }
    }
    if (!E.is_order_ideal(in_dom) || !E.is_order_ideal(in_ran)) {
      return false;
    }
    for (std::size_t x = 0; x < E.size(); ++x) {
      for (std::size_t y = 0; y < E.size(); ++y) {
        if (in_dom[x] && in_dom[y] && E.leq(x, y) != E.leq(f(x), f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  /// Renders `id{a,b}` for partial identities and `{a->b,...}` otherwise;
  /// `name` maps ground points to labels.
  template <typename Namer>
  std::string to_string(PartialBijection const& f, Namer&& name) {
    std::string out = f.is_idempotent() ? "id{" : "{";
    bool        first = true;
    for (std::size_t x = 0; x < f.ground(); ++x) {
      if (!f.defined(x)) {
        continue;
      }
      if (!first) {
        out += ",";
      }
      first = false;
      out += name(x);
      if (!f.is_idempotent()) {
        out += "->" + name(f(x));
      }
    }
    return out + "}";
  }

  inline std::string to_string(PartialBijection const& f) {
    return to_string(f, [](std::size_t x) { return std::to_string(x); });
  }

}  // namespace invsemi
