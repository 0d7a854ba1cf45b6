#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kspan {

using vid = std::uint32_t;

struct Edge {
  vid tail = 0;
  vid head = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Mode { vertex, arc };

inline const char* to_string(Mode m) { return m == Mode::vertex ? "vertex" : "arc"; }

// Malformed input or violated precondition.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bug: some guarantee of the construction did not hold.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Separating set found while verifying connectivity. In vertex mode `vertices`
// is the separator; in arc mode `edges` is the cut. `from` cannot reach `to`
// once the witness is removed.
struct Witness {
  std::vector<vid> vertices;
  std::vector<Edge> edges;
  vid from = 0;
  vid to = 0;
};

class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& what, Witness w)
      : std::runtime_error(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

// build_good ran out of repair rounds.
class construction_error : public std::runtime_error {
 public:
  construction_error(const std::string& what, std::vector<vid> best_order)
      : std::runtime_error(what), best_order_(std::move(best_order)) {}
  const std::vector<vid>& best_order() const { return best_order_; }

 private:
  std::vector<vid> best_order_;
};

#define KSPAN_ASSERT(cond, msg)                                              \
  do {                                                                       \
    if (!(cond)) throw ::kspan::internal_error(std::string("invariant: ") + (msg)); \
  } while (0)

}  // namespace kspan
