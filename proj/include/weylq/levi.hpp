#pragma once

#include <string>
#include <vector>

#include "weylq/rootsys.hpp"
#include "weylq/weight.hpp"

namespace weylq {

/**
 * A Levi-type subgroup of a classical group G of rank n is encoded by a
 * list of index blocks.  At most one block is classical (same type as G,
 * on a set of positive indices); the remaining blocks are general-linear,
 * each living on a set of signed indices x with 1 <= |x| <= n, where a
 * negative sign means the corresponding coordinate enters with weight
 * -1 in the embedding.  Absolute values of indices are pairwise distinct
 * across all blocks and cover {1..n}.
 */
enum class BlockKind { GL, Sp, SOodd, SOeven };

/** Root-system type of a standalone block of the given kind. */
Type block_type(BlockKind kind);

/** Short name used in serialized output: "GL", "Sp" or "SO". */
std::string block_kind_name(BlockKind kind);

struct LeviBlock {
    BlockKind kind = BlockKind::GL;
    /**
     * GL blocks: signed indices, strictly increasing as integers (so all
     * negative entries precede all positive ones).  Classical blocks:
     * positive indices, strictly increasing.  May be empty (trivial factor).
     */
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
};

struct LeviDatum {
    Type ambient = Type::A;
    int rank = 0;
    /** Classical block first if present, then the GL blocks in order. */
    std::vector<LeviBlock> blocks;
    /**
     * Offset bookkeeping for GL blocks produced by the residue algorithms
     * (one entry per GL block); empty for hand-built data.
     */
    std::vector<int> alpha_offsets;
};

/**
 * Weight of the subgroup in block form: one coordinate list per block,
 * aligned with LeviDatum::blocks.  Ordered lexicographically so it can key
 * ordered maps.
 */
struct LeviWeight {
    std::vector<std::vector<i64>> comps;

    friend bool operator==(const LeviWeight& a, const LeviWeight& b) {
        return a.comps == b.comps;
    }
    friend bool operator<(const LeviWeight& a, const LeviWeight& b) {
        return a.comps < b.comps;
    }
};

/**
 * Validates and assembles a Levi datum.  Rules: rank >= 1; at most one
 * classical block, placed first, with kind matching the ambient type
 * (Sp in type C, SO odd in type B, SO even in type D); GL-block indices
 * signed (positive only in type A) and strictly increasing; absolute
 * values pairwise distinct across blocks and covering {1..rank}.
 * Violations raise user errors.
 */
LeviDatum make_levi(Type ambient, int rank, std::vector<LeviBlock> blocks,
                    std::vector<int> alpha_offsets = {});

/** Raises a user error unless the component sizes match the block sizes. */
void validate_levi_weight(const LeviDatum& datum, const LeviWeight& w);

/**
 * Positive roots of one block, written in the ambient coordinates: block
 * coordinate a maps to sign(x_a) * e_{|x_a|}.  The block root system is
 * type A for GL blocks and the ambient type for the classical block.
 */
std::vector<Weight> embedded_block_roots(const LeviBlock& block, int rank);

/** Concatenation of embedded_block_roots over all blocks. */
std::vector<Weight> levi_positive_roots(const LeviDatum& datum);

/**
 * Global-coordinate form of a block weight: coordinate |x_a| of the result
 * carries sign(x_a) times component a of the owning block, and coordinates
 * not covered by any block are zero.
 */
Weight embed_weight(const LeviDatum& datum, const LeviWeight& w);

/**
 * Dominance for the subgroup: every GL component weakly increasing, the
 * classical component additionally a valid dominant weight of its type.
 */
bool levi_dominant(const LeviDatum& datum, const LeviWeight& w);

/**
 * Isomorphism label such as "Sp4xGL6" or "GL2xGL3xGL3"; empty blocks are
 * trivial factors and omitted.  An all-trivial subgroup is labeled "1".
 */
std::string levi_label(const LeviDatum& datum);

} // namespace weylq
