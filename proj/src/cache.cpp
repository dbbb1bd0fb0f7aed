#include "grpx/cache.hpp"

#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "grpx/error.hpp"

namespace grpx {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[8] = {'G', 'R', 'P', 'X', 'L', 'A', 'T', '\n'};

std::uint64_t fnv1a(const char* p, std::size_t n) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(p[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

template <class T>
void put(std::string& out, T v) {
  out.append(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_words(std::string& out, const Bitset& b) {
  out.append(reinterpret_cast<const char*>(b.data()), b.word_count() * sizeof(Bitset::Word));
}

class Reader {
 public:
  Reader(const std::string& buf, std::size_t end) : buf_(buf), end_(end) {}

  template <class T>
  T get() {
    T v;
    need(sizeof v);
    std::memcpy(&v, buf_.data() + pos_, sizeof v);
    pos_ += sizeof v;
    return v;
  }
  void fill(Bitset& b) {
    const std::size_t bytes = b.word_count() * sizeof(Bitset::Word);
    need(bytes);
    std::memcpy(b.data(), buf_.data() + pos_, bytes);
    pos_ += bytes;
  }
  bool done() const { return pos_ == end_; }

 private:
  void need(std::size_t n) const {
    if (end_ - pos_ < n) throw Error(ErrorCode::CorruptCache, "truncated lattice cache");
  }
  const std::string& buf_;
  std::size_t end_, pos_ = 0;
};

}  // namespace

fs::path cache_dir() {
  if (const char* c = std::getenv("GRPX_CACHE"); c && *c) return c;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "grpx";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "grpx";
  return fs::temp_directory_path() / "grpx-cache";
}

fs::path lattice_cache_path(const FiniteGroup& g, const fs::path& dir) {
  std::ostringstream name;
  name << "lattice-" << g.order() << "-" << std::hex << g.hash() << ".bin";
  return dir / name.str();
}

void save_lattice(const SubgroupLattice& l, const fs::path& file) {
  const std::size_t s = l.size();
  const std::size_t mw = s ? l.members(0).word_count() : 0, uw = s ? l.up(0).word_count() : 0;
  std::string out(kMagic, sizeof kMagic);
  put<std::uint32_t>(out, kLatticeCacheVersion);
  put<std::uint64_t>(out, l.group().hash());
  put<std::uint64_t>(out, l.group().order());
  put<std::uint64_t>(out, s);
  out.reserve(out.size() + s * (mw + uw) * sizeof(Bitset::Word) + 8);
  for (std::size_t i = 0; i < s; ++i) put_words(out, l.members(i));
  for (std::size_t i = 0; i < s; ++i) put_words(out, l.up(i));
  for (std::size_t i = 0; i < s; ++i) {
    const auto& gens = l.subgroup(i).generators;
    put<std::uint32_t>(out, static_cast<std::uint32_t>(gens.size()));
    for (Elem x : gens) put<std::uint32_t>(out, x);
  }
  put<std::uint64_t>(out, fnv1a(out.data(), out.size()));

  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  std::ostringstream tmp_name;
  tmp_name << file.filename().string() << ".tmp" << std::random_device{}();
  const fs::path tmp = file.parent_path() / tmp_name.str();
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) {
      fs::remove(tmp, ec);
      throw Error(ErrorCode::Io, "short write to " + tmp.string());
    }
  }
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot rename into " + file.string());
  }
}

SubgroupLattice load_lattice(const FiniteGroup& g, const fs::path& file) {
  std::ifstream f(file, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot read " + file.string());
  std::error_code ec;
  const auto size = fs::file_size(file, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot stat " + file.string());
  std::string buf(size, '\0');
  f.read(buf.data(), static_cast<std::streamsize>(size));
  if (static_cast<std::uintmax_t>(f.gcount()) != size) throw Error(ErrorCode::Io, "short read from " + file.string());

  const std::size_t header = sizeof kMagic + sizeof(std::uint32_t);
  if (buf.size() < header + sizeof(std::uint64_t) || std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0)
    throw Error(ErrorCode::CorruptCache, "bad header in " + file.string());
  std::uint32_t version;
  std::memcpy(&version, buf.data() + sizeof kMagic, sizeof version);
  if (version != kLatticeCacheVersion)
    throw Error(ErrorCode::CacheVersionMismatch,
                "file has version " + std::to_string(version) + ", expected " + std::to_string(kLatticeCacheVersion));
  const std::size_t body = buf.size() - sizeof(std::uint64_t);
  std::uint64_t sum;
  std::memcpy(&sum, buf.data() + body, sizeof sum);
  if (sum != fnv1a(buf.data(), body)) throw Error(ErrorCode::CorruptCache, "checksum mismatch in " + file.string());

  Reader r(buf, body);
  r.get<std::array<char, sizeof kMagic>>();
  r.get<std::uint32_t>();
  if (r.get<std::uint64_t>() != g.hash() || r.get<std::uint64_t>() != g.order())
    throw Error(ErrorCode::CorruptCache, "cache belongs to a different group");
  const auto s = r.get<std::uint64_t>();
  if (s == 0 || s > body) throw Error(ErrorCode::CorruptCache, "bad subgroup count");
  std::vector<Bitset> members(s, Bitset(g.order())), up(s, Bitset(s));
  for (auto& m : members) r.fill(m);
  for (auto& u : up) r.fill(u);
  std::vector<std::vector<Elem>> gens(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto k = r.get<std::uint32_t>();
    if (k > g.order()) throw Error(ErrorCode::CorruptCache, "bad generator count");
    gens[i].resize(k);
    for (auto& x : gens[i]) {
      x = r.get<std::uint32_t>();
      if (x >= g.order() || !members[i].test(x)) throw Error(ErrorCode::CorruptCache, "bad generator");
    }
  }
  if (!r.done()) throw Error(ErrorCode::CorruptCache, "trailing bytes in " + file.string());
  return SubgroupLattice(g, std::move(members), std::move(up), std::move(gens));
}

CachedLattice cached_lattice(const FiniteGroup& g, const std::optional<fs::path>& dir) {
  const fs::path file = lattice_cache_path(g, dir ? *dir : cache_dir());
  CachedLattice out;
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      out.lattice = std::make_shared<const SubgroupLattice>(load_lattice(g, file));
      out.source = CachedLattice::Source::Loaded;
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CorruptCache && e.code() != ErrorCode::CacheVersionMismatch &&
          e.code() != ErrorCode::Io)
        throw;
      out.source = CachedLattice::Source::Recomputed;
      out.reason = e.what();
    }
  }
  out.lattice = std::make_shared<const SubgroupLattice>(enumerate_subgroups(g));
  try {
    save_lattice(*out.lattice, file);
  } catch (const Error&) {
  }
  return out;
}

bool cache_roundtrip(const SubgroupLattice& l, const fs::path& dir) {
  const fs::path file = lattice_cache_path(l.group(), dir);
  save_lattice(l, file);
  return load_lattice(l.group(), file) == l;
}

}  // namespace grpx
