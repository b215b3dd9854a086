#include "freecomm/virtual_aut.hpp"

#include <unordered_map>

#include "freecomm/error.hpp"
#include "json.hpp"

namespace freecomm {

namespace {

std::shared_ptr<const Subgroup> checked_image(std::size_t rank, const std::vector<Word>& images) {
  auto image = std::make_shared<const Subgroup>(Subgroup::from_generators(rank, images));
  if (image->rank() != images.size()) {
    throw Error(ErrorCode::not_injective, "image subgroup has rank " +
                                              std::to_string(image->rank()) + " < " +
                                              std::to_string(images.size()));
  }
  if (!image->is_complete()) {
    throw Error(ErrorCode::infinite_index_image, "image subgroup has infinite index");
  }
  return image;
}

// perm[i] = index of images[i] in basis, when the images are a permutation
// of the basis.
std::optional<std::vector<std::uint32_t>> as_permutation(const std::vector<Word>& basis,
                                                         const std::vector<Word>& images) {
  if (basis.size() != images.size()) {
    return std::nullopt;
  }
  std::unordered_map<Word, std::uint32_t> where;
  for (std::uint32_t i = 0; i < basis.size(); ++i) {
    where.emplace(basis[i], i);
  }
  std::vector<std::uint32_t> perm;
  std::vector<char> hit(basis.size(), 0);
  for (const auto& w : images) {
    auto it = where.find(w);
    if (it == where.end() || hit[it->second]) {
      return std::nullopt;
    }
    hit[it->second] = 1;
    perm.push_back(it->second);
  }
  return perm;
}

void check_arity(std::size_t basis, std::size_t images) {
  if (basis != images) {
    throw Error(ErrorCode::arity_mismatch, std::to_string(images) + " images for " +
                                               std::to_string(basis) + " basis elements");
  }
}

}  // namespace

Alphabet ambient_alphabet(std::size_t rank) {
  return rank == 2 ? Alphabet::free2() : Alphabet(rank);
}

VirtualAut VirtualAut::make(const Subgroup& domain, std::vector<Word> images) {
  if (!domain.is_complete()) {
    throw Error(ErrorCode::incomplete_domain, "domain has infinite index");
  }
  check_arity(domain.rank(), images.size());
  auto image = checked_image(domain.ambient_rank(), images);
  auto dom = std::make_shared<const Subgroup>(domain);
  auto rw = std::make_shared<const Rewriter>(Rewriter::from_subgroup(domain));
  auto basis = std::make_shared<const std::vector<Word>>(domain.basis());
  return VirtualAut(std::move(dom), std::move(basis), std::move(rw), std::move(images),
                    std::move(image));
}

VirtualAut VirtualAut::on_basis(std::size_t ambient_rank, std::vector<Word> basis,
                                std::vector<Word> images) {
  auto rw = std::make_shared<const Rewriter>(Rewriter::from_generators(ambient_rank, basis));
  auto dom = std::make_shared<const Subgroup>(rw->graph());
  if (!dom->is_complete()) {
    throw Error(ErrorCode::incomplete_domain, "domain has infinite index");
  }
  check_arity(basis.size(), images.size());
  std::shared_ptr<const Subgroup> image =
      as_permutation(basis, images) ? dom : checked_image(ambient_rank, images);
  return VirtualAut(std::move(dom), std::make_shared<const std::vector<Word>>(std::move(basis)),
                    std::move(rw), std::move(images), std::move(image));
}

VirtualAut VirtualAut::permuting(std::shared_ptr<const Subgroup> domain,
                                 std::shared_ptr<const Rewriter> rewriter,
                                 std::shared_ptr<const std::vector<Word>> basis,
                                 std::span<const std::uint32_t> perm) {
  if (!domain->is_complete()) {
    throw Error(ErrorCode::incomplete_domain, "domain has infinite index");
  }
  check_arity(basis->size(), perm.size());
  if (rewriter->basis_size() != basis->size()) {
    throw Error(ErrorCode::arity_mismatch, "rewriter does not match the basis");
  }
  std::vector<char> hit(perm.size(), 0);
  std::vector<Word> images;
  images.reserve(perm.size());
  for (auto p : perm) {
    if (p >= perm.size() || hit[p]) {
      throw Error(ErrorCode::not_injective, "basis map is not a permutation");
    }
    hit[p] = 1;
    images.push_back((*basis)[p]);
  }
  auto image = domain;
  return VirtualAut(std::move(domain), std::move(basis), std::move(rewriter), std::move(images),
                    std::move(image));
}

VirtualAut VirtualAut::identity(std::size_t ambient_rank) {
  auto whole = Subgroup::whole(ambient_rank);
  return make(whole, whole.basis());
}

Word VirtualAut::apply(const Word& w) const {
  if (w.rank() != ambient_rank()) {
    throw Error(ErrorCode::alphabet_mismatch, "word over rank " + std::to_string(w.rank()) +
                                                  ", map over rank " +
                                                  std::to_string(ambient_rank()));
  }
  auto coords = rewriter_->try_express(w);
  if (!coords) {
    throw Error(ErrorCode::not_in_domain, format(w, ambient_alphabet(ambient_rank())));
  }
  return substitute(*coords, images_, ambient_rank());
}

VirtualAut VirtualAut::normalized() const {
  if (basis_is_canonical()) {
    return *this;
  }
  std::vector<Word> images;
  for (const auto& c : domain_->basis()) {
    images.push_back(apply(c));
  }
  auto rw = std::make_shared<const Rewriter>(Rewriter::from_subgroup(*domain_));
  auto basis = std::make_shared<const std::vector<Word>>(domain_->basis());
  return VirtualAut(domain_, std::move(basis), std::move(rw), std::move(images), image_);
}

std::shared_ptr<const Rewriter> images_rewriter(const VirtualAut& va) {
  if (auto perm = as_permutation(*va.basis_, va.images_)) {
    // images[i] = basis[perm[i]], so basis letter perm[i] becomes image letter i
    std::vector<std::uint32_t> relabel(perm->size());
    for (std::uint32_t i = 0; i < perm->size(); ++i) {
      relabel[(*perm)[i]] = i;
    }
    return std::make_shared<const Rewriter>(va.rewriter_->relabeled(relabel));
  }
  return std::make_shared<const Rewriter>(
      Rewriter::from_generators(va.ambient_rank(), va.images_));
}

VirtualAut invert(const VirtualAut& va) {
  auto rw = images_rewriter(va);
  const auto& target = *va.image_;
  std::vector<Word> images;
  images.reserve(target.rank());
  for (const auto& c : target.basis()) {
    images.push_back(substitute(rw->express(c), *va.basis_, va.ambient_rank()));
  }
  auto canonical = std::make_shared<const Rewriter>(Rewriter::from_subgroup(target));
  auto basis = std::make_shared<const std::vector<Word>>(target.basis());
  return VirtualAut(va.image_, std::move(basis), std::move(canonical), std::move(images),
                    va.domain_);
}

VirtualAut compose(const VirtualAut& outer, const VirtualAut& inner) {
  if (outer.ambient_rank() != inner.ambient_rank()) {
    throw Error(ErrorCode::alphabet_mismatch, "composing over different free groups");
  }
  const auto rank = inner.ambient_rank();
  auto common = intersect(inner.image_subgroup(), outer.domain());
  auto domain = inner.domain();
  if (!(common == inner.image_subgroup())) {
    auto back = images_rewriter(inner);
    std::vector<Word> preimage;
    preimage.reserve(common.rank());
    for (const auto& d : common.basis()) {
      preimage.push_back(substitute(back->express(d), inner.basis(), rank));
    }
    domain = Subgroup::from_generators(rank, preimage);
  }
  std::vector<Word> images;
  images.reserve(domain.rank());
  for (const auto& c : domain.basis()) {
    images.push_back(outer.apply(inner.apply(c)));
  }
  return VirtualAut::make(domain, std::move(images));
}

VirtualAut restrict(const VirtualAut& va, const Subgroup& sub) {
  if (!sub.is_complete()) {
    throw Error(ErrorCode::incomplete_domain, "restriction to an infinite-index subgroup");
  }
  std::vector<Word> images;
  images.reserve(sub.rank());
  for (const auto& c : sub.basis()) {
    if (!va.domain().contains(c)) {
      throw Error(ErrorCode::not_a_subgroup_of_domain,
                  format(c, ambient_alphabet(va.ambient_rank())) + " is outside the domain");
    }
    images.push_back(va.apply(c));
  }
  return VirtualAut::make(sub, std::move(images));
}

bool comm_equal(const VirtualAut& a, const VirtualAut& b) {
  auto common = intersect(a.domain(), b.domain());
  for (const auto& c : common.basis()) {
    if (a.apply(c) != b.apply(c)) {
      return false;
    }
  }
  return true;
}

bool is_identity(const VirtualAut& va) { return va.images() == va.basis(); }

bool same_representative(const VirtualAut& a, const VirtualAut& b) {
  if (!(a.domain() == b.domain())) {
    return false;
  }
  return a.normalized().images() == b.normalized().images();
}

std::string to_json(const VirtualAut& va) {
  auto alphabet = ambient_alphabet(va.ambient_rank());
  nlohmann::ordered_json j;
  j["ambient_rank"] = va.ambient_rank();
  auto& basis = j["domain_basis"] = nlohmann::ordered_json::array();
  for (const auto& w : va.basis()) {
    basis.push_back(format(w, alphabet));
  }
  auto& images = j["images"] = nlohmann::ordered_json::array();
  for (const auto& w : va.images()) {
    images.push_back(format(w, alphabet));
  }
  return j.dump(2) + "\n";
}

VirtualAut from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_input, e.what());
  }
  try {
    auto rank = j.at("ambient_rank").get<std::size_t>();
    auto alphabet = ambient_alphabet(rank);
    std::vector<Word> basis;
    for (const auto& s : j.at("domain_basis")) {
      basis.push_back(parse_word(s.get<std::string>(), alphabet));
    }
    std::vector<Word> images;
    for (const auto& s : j.at("images")) {
      images.push_back(parse_word(s.get<std::string>(), alphabet));
    }
    return VirtualAut::on_basis(rank, std::move(basis), std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_input, e.what());
  }
}

}  // namespace freecomm
