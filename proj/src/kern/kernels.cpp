#include "ghc/kern/kernels.hpp"

#include <cstdlib>
#include <string>

#include "ghc/error.hpp"

namespace ghc::kern {

namespace {

const Ops& select() {
    if (const char* env = std::getenv("GHC_KERNEL")) {
        const std::string want(env);
        if (want == "scalar") return scalar_ops();
        if (want == "avx2") {
            if (const Ops* o = avx2_ops()) return *o;
            fail(Errc::ParamRange, "GHC_KERNEL=avx2 requested but AVX2 is unavailable");
        }
        if (want == "neon") {
            if (const Ops* o = neon_ops()) return *o;
            fail(Errc::ParamRange, "GHC_KERNEL=neon requested but NEON is unavailable");
        }
        fail(Errc::ParamRange, "unknown GHC_KERNEL value: " + want);
    }
    if (const Ops* o = avx2_ops()) return *o;
    if (const Ops* o = neon_ops()) return *o;
    return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    static const Ops& ops = select();
    return ops;
}

std::vector<const Ops*> available_ops() {
    std::vector<const Ops*> out{&scalar_ops()};
    if (const Ops* o = avx2_ops()) out.push_back(o);
    if (const Ops* o = neon_ops()) out.push_back(o);
    return out;
}

}  // namespace ghc::kern
