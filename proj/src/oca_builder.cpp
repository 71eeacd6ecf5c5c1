#include "turnpda/oca_builder.hpp"

namespace turnpda {

OcaBuilder::OcaBuilder(const std::vector<std::string>& inputs, std::string counter, std::string bottom)
    : counter_(std::move(counter)), bottom_(std::move(bottom)), drain_("drain") {
  b_.stack(counter_);
  b_.stack(bottom_);
  b_.set_bottom(bottom_);
  for (const auto& a : inputs) b_.input(a);
}

void OcaBuilder::keep(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, counter_, to, {counter_});
  b_.add(from, read, bottom_, to, {bottom_});
}

void OcaBuilder::inc(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, counter_, to, {counter_, counter_});
  b_.add(from, read, bottom_, to, {counter_, bottom_});
}

void OcaBuilder::dec(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, counter_, to, {});
}

void OcaBuilder::dec_or_stay(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, counter_, to, {});
  b_.add(from, read, bottom_, to, {bottom_});
}

void OcaBuilder::if_zero(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, bottom_, to, {bottom_});
}

void OcaBuilder::if_pos(const std::string& from, const std::string& read, const std::string& to) {
  b_.add(from, read, counter_, to, {counter_});
}

void OcaBuilder::accept(const std::string& q) {
  b_.add(q, "", counter_, drain_, {});
  b_.add(q, "", bottom_, drain_, {});
  b_.add(drain_, "", counter_, drain_, {});
  b_.add(drain_, "", bottom_, drain_, {});
}

void OcaBuilder::accept_if_zero(const std::string& q) { b_.add(q, "", bottom_, drain_, {}); }

void keep_all(OcaBuilder& o, const std::string& from, const std::vector<std::string>& symbols,
              const std::string& to) {
  for (const auto& s : symbols) o.keep(from, s, to);
}

}  // namespace turnpda
