#include "weylq/levi.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylq/error.hpp"

namespace weylq {

Type block_type(BlockKind kind) {
    switch (kind) {
        case BlockKind::GL: return Type::A;
        case BlockKind::Sp: return Type::C;
        case BlockKind::SOodd: return Type::B;
        case BlockKind::SOeven: return Type::D;
    }
    throw internal_error("unknown block kind");
}

std::string block_kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::GL: return "GL";
        case BlockKind::Sp: return "Sp";
        case BlockKind::SOodd: return "SO";
        case BlockKind::SOeven: return "SO";
    }
    throw internal_error("unknown block kind");
}

namespace {

BlockKind classical_kind(Type ambient) {
    switch (ambient) {
        case Type::A: return BlockKind::GL;
        case Type::B: return BlockKind::SOodd;
        case Type::C: return BlockKind::Sp;
        case Type::D: return BlockKind::SOeven;
    }
    throw internal_error("unknown ambient type");
}

} // namespace

LeviDatum make_levi(Type ambient, int rank, std::vector<LeviBlock> blocks,
                    std::vector<int> alpha_offsets) {
    require_user(rank >= 1, "levi datum rank must be at least 1");
    std::vector<bool> used(static_cast<std::size_t>(rank), false);
    int n_classical = 0;
    int n_gl = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const LeviBlock& blk = blocks[b];
        const bool is_gl = blk.kind == BlockKind::GL && ambient != Type::A;
        if (blk.kind != BlockKind::GL) {
            require_user(blk.kind == classical_kind(ambient),
                         "classical block kind does not match the ambient type");
            require_user(b == 0, "classical block must come first");
            ++n_classical;
        }
        if (is_gl) ++n_gl;
        int prev = 0;
        bool have_prev = false;
        for (int x : blk.indices) {
            require_user(x != 0, "block index must be nonzero");
            if (!is_gl)
                require_user(x > 0, "indices of this block must be positive");
            const int a = std::abs(x);
            require_user(a <= rank, "block index out of range");
            require_user(!used[static_cast<std::size_t>(a - 1)],
                         "blocks must use pairwise distinct coordinates");
            used[static_cast<std::size_t>(a - 1)] = true;
            require_user(!have_prev || x > prev,
                         "block indices must be strictly increasing");
            prev = x;
            have_prev = true;
        }
    }
    require_user(n_classical <= 1, "at most one classical block is allowed");
    for (bool u : used)
        require_user(u, "blocks must cover every coordinate");
    require_user(alpha_offsets.empty() ||
                     alpha_offsets.size() == static_cast<std::size_t>(
                                                 ambient == Type::A
                                                     ? static_cast<int>(blocks.size())
                                                     : n_gl),
                 "one alpha offset per GL block expected");
    LeviDatum d;
    d.ambient = ambient;
    d.rank = rank;
    d.blocks = std::move(blocks);
    d.alpha_offsets = std::move(alpha_offsets);
    return d;
}

void validate_levi_weight(const LeviDatum& datum, const LeviWeight& w) {
    require_user(w.comps.size() == datum.blocks.size(),
                 "levi weight must have one component per block");
    for (std::size_t b = 0; b < w.comps.size(); ++b)
        require_user(w.comps[b].size() ==
                         static_cast<std::size_t>(datum.blocks[b].size()),
                     "levi weight component size must match the block size");
}

std::vector<Weight> embedded_block_roots(const LeviBlock& block, int rank) {
    std::vector<Weight> out;
    const int r = block.size();
    if (r == 0) return out;
    const RootSystem rs = RootSystem::build(block_type(block.kind), r);
    for (const Weight& root : rs.positive_roots()) {
        Weight g(static_cast<std::size_t>(rank));
        for (int a = 0; a < r; ++a) {
            const int x = block.indices[static_cast<std::size_t>(a)];
            const int sgn = x > 0 ? 1 : -1;
            g.d(static_cast<std::size_t>(std::abs(x) - 1)) +=
                sgn * root.d(static_cast<std::size_t>(a));
        }
        out.push_back(g);
    }
    return out;
}

std::vector<Weight> levi_positive_roots(const LeviDatum& datum) {
    std::vector<Weight> out;
    for (const LeviBlock& blk : datum.blocks) {
        std::vector<Weight> part = embedded_block_roots(blk, datum.rank);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Weight embed_weight(const LeviDatum& datum, const LeviWeight& w) {
    validate_levi_weight(datum, w);
    Weight g(static_cast<std::size_t>(datum.rank));
    for (std::size_t b = 0; b < datum.blocks.size(); ++b) {
        const LeviBlock& blk = datum.blocks[b];
        for (std::size_t a = 0; a < blk.indices.size(); ++a) {
            const int x = blk.indices[a];
            const int sgn = x > 0 ? 1 : -1;
            g.d(static_cast<std::size_t>(std::abs(x) - 1)) = 2 * sgn * w.comps[b][a];
        }
    }
    return g;
}

bool levi_dominant(const LeviDatum& datum, const LeviWeight& w) {
    validate_levi_weight(datum, w);
    for (std::size_t b = 0; b < datum.blocks.size(); ++b) {
        const std::vector<i64>& c = w.comps[b];
        if (c.empty()) continue;
        switch (datum.blocks[b].kind) {
            case BlockKind::GL:
                if (!weakly_increasing(c)) return false;
                break;
            case BlockKind::Sp:
            case BlockKind::SOodd:
                if (!weakly_increasing(c) || c[0] < 0) return false;
                break;
            case BlockKind::SOeven:
                // The first coordinate may be negative, below the second.
                if (!weakly_increasing({c.begin() + 1, c.end()})) return false;
                if (c.size() >= 2 && std::abs(c[0]) > c[1]) return false;
                break;
        }
    }
    return true;
}

std::string levi_label(const LeviDatum& datum) {
    std::string out;
    for (const LeviBlock& blk : datum.blocks) {
        const int r = blk.size();
        if (r == 0) continue;
        std::string part;
        switch (blk.kind) {
            case BlockKind::GL: part = "GL" + std::to_string(r); break;
            case BlockKind::Sp: part = "Sp" + std::to_string(2 * r); break;
            case BlockKind::SOodd: part = "SO" + std::to_string(2 * r + 1); break;
            case BlockKind::SOeven: part = "SO" + std::to_string(2 * r); break;
        }
        if (!out.empty()) out += "x";
        out += part;
    }
    return out.empty() ? "1" : out;
}

} // namespace weylq
