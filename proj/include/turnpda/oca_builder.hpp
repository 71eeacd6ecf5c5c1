#pragma once

#include <string>
#include <vector>

#include "turnpda/automaton.hpp"

namespace turnpda {

/// Builds one-counter automata from counter operations. Every operation is
/// attached to a move from `from` to `to` reading `read` ("" = epsilon).
class OcaBuilder {
 public:
  explicit OcaBuilder(const std::vector<std::string>& inputs, std::string counter = "A",
                      std::string bottom = "Z0");

  void set_initial(const std::string& q) { b_.set_initial(q); }

  /// Any counter value, unchanged.
  void keep(const std::string& from, const std::string& read, const std::string& to);
  void inc(const std::string& from, const std::string& read, const std::string& to);
  /// Requires a positive counter.
  void dec(const std::string& from, const std::string& read, const std::string& to);
  /// Decrements a positive counter, leaves zero alone.
  void dec_or_stay(const std::string& from, const std::string& read, const std::string& to);
  void if_zero(const std::string& from, const std::string& read, const std::string& to);
  void if_pos(const std::string& from, const std::string& read, const std::string& to);

  /// Accepts from `q` whatever the counter holds (epsilon drain).
  void accept(const std::string& q);
  /// Accepts from `q` when the counter is zero.
  void accept_if_zero(const std::string& q);

  const std::string& counter() const { return counter_; }
  const std::string& bottom() const { return bottom_; }
  PdaBuilder& raw() { return b_; }

  Pda build() const { return b_.build(); }

 private:
  PdaBuilder b_;
  std::string counter_, bottom_;
  std::string drain_;
};

/// Adds, for each symbol in `symbols`, a counter-preserving move.
void keep_all(OcaBuilder& o, const std::string& from, const std::vector<std::string>& symbols,
              const std::string& to);

}  // namespace turnpda
