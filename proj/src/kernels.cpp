#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace grover::kernels {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(GROVER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* lookup(Isa isa) {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::kScalar:
      return &scalar_table();
    case Isa::kAvx2:
#ifdef GROVER_HAVE_AVX2
      return &avx2_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_choice() {
  if (const char* env = std::getenv("GROVER_KERNELS")) {
    const std::string want(env);
    for (Isa isa : available_isas()) {
      if (want == isa_name(isa)) return lookup(isa);
    }
  }
  return lookup(available_isas().back());
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2}) {
    if (lookup(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& table_for(Isa isa) {
  const KernelTable* t = lookup(isa);
  if (t == nullptr) {
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                                "' is not available on this machine");
  }
  return *t;
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const KernelTable* chosen = initial_choice();
    g_active.compare_exchange_strong(t, chosen, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

void set_active(Isa isa) { g_active.store(&table_for(isa), std::memory_order_release); }

}  // namespace grover::kernels
