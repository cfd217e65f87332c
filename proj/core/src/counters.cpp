#include "powfactor/counters.hpp"

namespace powfactor {
namespace {

thread_local CountScope* active_scope = nullptr;

}  // namespace

CountScope::CountScope() : previous_(active_scope) { active_scope = this; }

CountScope::~CountScope() {
  active_scope = previous_;
  if (previous_ != nullptr) {
    previous_->counts_ += counts_;
  }
}

void note_mulmods(std::uint64_t n) {
  if (active_scope != nullptr) active_scope->counts_.mulmods += n;
}

void note_gcds(std::uint64_t n) {
  if (active_scope != nullptr) active_scope->counts_.gcds += n;
}

}  // namespace powfactor
