#pragma once

// Virtual automorphisms of a free group: isomorphisms between finite-index
// subgroups, with the equality and group law of the abstract commensurator.
//
// A representative stores a free basis of its domain and the image of each
// basis element.  The basis is usually the domain's canonical one; embeddings
// keep the basis they were built on (see hall.hpp) and `normalized()`
// converts.  Representatives are never canonicalized within their class.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

class VirtualAut {
 public:
  // Images of the canonical basis of `domain`.  Throws incomplete_domain,
  // arity_mismatch, infinite_index_image or not_injective.
  static VirtualAut make(const Subgroup& domain, std::vector<Word> images);

  // Images of an arbitrary free basis; the domain is the subgroup it
  // generates.  Additionally throws not_a_basis.
  static VirtualAut on_basis(std::size_t ambient_rank, std::vector<Word> basis,
                             std::vector<Word> images);

  // The automorphism permuting a free basis: basis[i] -> basis[perm[i]].
  // `rewriter` must be the rewriter of `basis`, and `domain` its subgroup.
  static VirtualAut permuting(std::shared_ptr<const Subgroup> domain,
                              std::shared_ptr<const Rewriter> rewriter,
                              std::shared_ptr<const std::vector<Word>> basis,
                              std::span<const std::uint32_t> perm);

  static VirtualAut identity(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return domain_->ambient_rank(); }
  const Subgroup& domain() const noexcept { return *domain_; }
  const std::vector<Word>& basis() const noexcept { return *basis_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Subgroup& image_subgroup() const noexcept { return *image_; }

  bool basis_is_canonical() const { return *basis_ == domain_->basis(); }

  // Throws not_in_domain, or alphabet_mismatch for a word of another rank.
  Word apply(const Word& w) const;

  // Same map, images given on the canonical basis of the domain.
  VirtualAut normalized() const;

 private:
  VirtualAut(std::shared_ptr<const Subgroup> domain, std::shared_ptr<const std::vector<Word>> basis,
             std::shared_ptr<const Rewriter> rewriter, std::vector<Word> images,
             std::shared_ptr<const Subgroup> image)
      : domain_(std::move(domain)),
        basis_(std::move(basis)),
        rewriter_(std::move(rewriter)),
        images_(std::move(images)),
        image_(std::move(image)) {}

  friend VirtualAut invert(const VirtualAut& va);
  friend std::shared_ptr<const Rewriter> images_rewriter(const VirtualAut& va);

  std::shared_ptr<const Subgroup> domain_;
  std::shared_ptr<const std::vector<Word>> basis_;
  std::shared_ptr<const Rewriter> rewriter_;
  std::vector<Word> images_;
  std::shared_ptr<const Subgroup> image_;
};

// Rewriter for the image list as a free basis of the image subgroup.
std::shared_ptr<const Rewriter> images_rewriter(const VirtualAut& va);

// Inverse map, on the canonical basis of the image subgroup.
VirtualAut invert(const VirtualAut& va);

// outer after inner, on the preimage under `inner` of
// image(inner) & domain(outer).
VirtualAut compose(const VirtualAut& outer, const VirtualAut& inner);

// Restriction to a finite-index subgroup of the domain.  Throws
// incomplete_domain or not_a_subgroup_of_domain.
VirtualAut restrict(const VirtualAut& va, const Subgroup& sub);

// Agreement on the intersection of the two domains: equality in the
// abstract commensurator.
bool comm_equal(const VirtualAut& a, const VirtualAut& b);

bool is_identity(const VirtualAut& va);

// Same domain and same map on it (stronger than comm_equal).
bool same_representative(const VirtualAut& a, const VirtualAut& b);

// {"ambient_rank": r, "domain_basis": [...], "images": [...]} with words in
// text form over {x, y} for rank 2 and g<i> otherwise.  Loading revalidates.
std::string to_json(const VirtualAut& va);
VirtualAut from_json(std::string_view text);

Alphabet ambient_alphabet(std::size_t rank);

}  // namespace freecomm
