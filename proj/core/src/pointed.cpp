// Copyright 2026 The combs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "combs/instances/pointed.hpp"

#include <functional>
#include <optional>

namespace combs {

namespace {

bool valid_name(const std::string& n) {
  return !n.empty() && n.back() != '*' && n != "I";
}

}  // namespace

void PointedBackend::add_state(const std::string& name) {
  if (!valid_name(name) || effects_.count(name))
    fail(ErrorKind::TypeError, "bad state name '" + name + "'");
  states_.insert(name);
}

void PointedBackend::add_effect(const std::string& name) {
  if (!valid_name(name) || states_.count(name))
    fail(ErrorKind::TypeError, "bad effect name '" + name + "'");
  effects_.insert(name);
}

void PointedBackend::add_cancel(const std::string& effect,
                                const std::string& state) {
  if (!effects_.count(effect)) fail(ErrorKind::UnknownGenerator, effect);
  if (!states_.count(state)) fail(ErrorKind::UnknownGenerator, state);
  cancel_.insert({effect, state});
}

void PointedBackend::add_exchange(const std::string& effect,
                                  const std::string& s1,
                                  const std::string& s2) {
  if (!effects_.count(effect)) fail(ErrorKind::UnknownGenerator, effect);
  for (const auto& s : {s1, s2})
    if (!states_.count(s)) fail(ErrorKind::UnknownGenerator, s);
  exchange_[effect].insert(std::minmax(s1, s2));
}

std::vector<std::string> PointedBackend::critical_pairs() const {
  std::vector<std::string> out;
  // An exchange key that also cancels would let e ∘ s ∘ e rewrite two ways.
  for (const auto& [key, edges] : exchange_)
    for (const auto& [e, s] : cancel_)
      if (e == key)
        out.push_back("effect " + e + " both cancels " + s +
                      " and keys an exchange");
  // Exchanging the state of a cancelling scalar must keep it cancelling.
  for (const auto& [key, edges] : exchange_)
    for (const auto& [a, b] : edges)
      for (const auto& e : effects_)
        if (cancels(e, a) != cancels(e, b))
          out.push_back("exchange " + a + " ~ " + b + " under " + key +
                        " disagrees on cancel with " + e);
  return out;
}

void PointedBackend::check_confluence() const {
  const auto pairs = critical_pairs();
  if (pairs.empty()) return;
  std::string msg = "rewrite rules are not confluent:";
  for (const auto& p : pairs) msg += " " + p + ";";
  fail(ErrorKind::TypeError, msg);
}

std::size_t PointedBackend::arity(const ObjectWord& w) const {
  for (const auto& f : w.factors())
    if (f != object_) fail(ErrorKind::UnknownGenerator, "object " + f);
  return w.size();
}

ObjectWord PointedBackend::power(std::size_t n) const {
  return ObjectWord(std::vector<std::string>(n, object_));
}

std::string PointedBackend::least_partner(
    const std::string& s, const std::multiset<std::string>& keys,
    const std::string& consumer) const {
  std::set<std::string> seen{s};
  std::vector<std::string> todo{s};
  while (!todo.empty()) {
    const std::string cur = todo.back();
    todo.pop_back();
    for (const auto& [key, edges] : exchange_) {
      const std::size_t have = keys.count(key) - (key == consumer ? 1 : 0);
      if (have == 0) continue;
      for (const auto& [a, b] : edges) {
        const std::string* next = a == cur ? &b : b == cur ? &a : nullptr;
        if (next && seen.insert(*next).second) todo.push_back(*next);
      }
    }
  }
  return *seen.begin();
}

PointedBackend::Morphism PointedBackend::canonical(Morphism m) const {
  std::multiset<std::string> keys;
  for (const auto& e : m.effects)
    if (!e.empty()) keys.insert(e);
  for (const auto& [e, s] : m.scalars) keys.insert(e);
  if (!exchange_.empty()) {
    for (auto& o : m.outputs)
      if (auto s = std::get_if<std::string>(&o)) *s = least_partner(*s, keys, "");
    for (auto& [e, s] : m.scalars) s = least_partner(s, keys, e);
  }
  std::sort(m.scalars.begin(), m.scalars.end());
  return m;
}

PointedBackend::Morphism PointedBackend::identity(const ObjectWord& w) const {
  Morphism m;
  m.inputs = arity(w);
  for (std::size_t i = 0; i < m.inputs; ++i) m.outputs.emplace_back(i);
  m.effects.assign(m.inputs, "");
  return m;
}

PointedBackend::Morphism PointedBackend::compose(const Morphism& first,
                                                 const Morphism& second) const {
  if (first.outputs.size() != second.inputs)
    fail(ErrorKind::TypeMismatch, "compose " + cod(first).str() + " with " +
                                      dom(second).str());
  Morphism r;
  r.inputs = first.inputs;
  r.effects = first.effects;
  r.scalars = first.scalars;
  r.scalars.insert(r.scalars.end(), second.scalars.begin(), second.scalars.end());
  for (std::size_t j = 0; j < second.inputs; ++j) {
    const std::string& e = second.effects[j];
    if (e.empty()) continue;
    const auto& src = first.outputs[j];
    if (auto i = std::get_if<std::size_t>(&src)) {
      r.effects[*i] = e;
    } else {
      const auto& s = std::get<std::string>(src);
      if (!cancels(e, s)) r.scalars.emplace_back(e, s);
    }
  }
  for (const auto& o : second.outputs) {
    if (auto j = std::get_if<std::size_t>(&o))
      r.outputs.push_back(first.outputs[*j]);
    else
      r.outputs.push_back(o);
  }
  return canonical(std::move(r));
}

PointedBackend::Morphism PointedBackend::tensor(const Morphism& a,
                                                const Morphism& b) const {
  Morphism r = a;
  r.inputs = a.inputs + b.inputs;
  for (const auto& o : b.outputs) {
    if (auto i = std::get_if<std::size_t>(&o))
      r.outputs.emplace_back(*i + a.inputs);
    else
      r.outputs.push_back(o);
  }
  r.effects.insert(r.effects.end(), b.effects.begin(), b.effects.end());
  r.scalars.insert(r.scalars.end(), b.scalars.begin(), b.scalars.end());
  return canonical(std::move(r));
}

PointedBackend::Morphism PointedBackend::symmetry(const ObjectWord& x,
                                                  const ObjectWord& y) const {
  const std::size_t nx = arity(x), ny = arity(y);
  Morphism m;
  m.inputs = nx + ny;
  for (std::size_t t = 0; t < ny; ++t) m.outputs.emplace_back(nx + t);
  for (std::size_t t = 0; t < nx; ++t) m.outputs.emplace_back(t);
  m.effects.assign(m.inputs, "");
  return m;
}

Capabilities PointedBackend::capabilities() const {
  Capabilities c;
  c.enumerable = true;
  return c;
}

PointedBackend::Morphism PointedBackend::generator(const std::string& name) const {
  Morphism m;
  if (states_.count(name)) {
    m.outputs.emplace_back(name);
  } else if (effects_.count(name)) {
    m.inputs = 1;
    m.effects = {name};
  } else {
    fail(ErrorKind::UnknownGenerator, name);
  }
  return m;
}

PointedBackend::Morphism PointedBackend::from_literal(
    const ObjectWord& d, const ObjectWord& c, const nlohmann::json& j) const {
  Morphism m;
  m.inputs = arity(d);
  m.effects.assign(m.inputs, "");
  if (!j.is_object()) fail(ErrorKind::ParseError, "pointed literal must be an object");
  std::vector<bool> used(m.inputs, false);
  for (const auto& o : j.value("outputs", nlohmann::json::array())) {
    if (o.is_number_integer()) {
      const auto i = o.get<long long>();
      if (i < 0 || std::size_t(i) >= m.inputs || used[i])
        fail(ErrorKind::TypeError, "output source " + o.dump() + " is not a free input");
      used[i] = true;
      m.outputs.emplace_back(std::size_t(i));
    } else if (o.is_string() && states_.count(o.get<std::string>())) {
      m.outputs.emplace_back(o.get<std::string>());
    } else {
      fail(ErrorKind::UnknownGenerator, "output source " + o.dump());
    }
  }
  if (m.outputs.size() != arity(c))
    fail(ErrorKind::TypeError, "literal has " + std::to_string(m.outputs.size()) +
                                   " outputs, codomain " + c.str());
  const auto effs = j.value("effects", nlohmann::json::array());
  for (std::size_t i = 0; i < m.inputs; ++i) {
    const bool given = i < effs.size() && effs[i].is_string();
    if (used[i] == given)
      fail(ErrorKind::TypeError, "input " + std::to_string(i) +
                                     " must be either wired or discarded");
    if (given) {
      const auto e = effs[i].get<std::string>();
      if (!effects_.count(e)) fail(ErrorKind::UnknownGenerator, e);
      m.effects[i] = e;
    }
  }
  for (const auto& sc : j.value("scalars", nlohmann::json::array())) {
    const auto e = sc.at(0).get<std::string>(), s = sc.at(1).get<std::string>();
    if (!effects_.count(e)) fail(ErrorKind::UnknownGenerator, e);
    if (!states_.count(s)) fail(ErrorKind::UnknownGenerator, s);
    if (!cancels(e, s)) m.scalars.emplace_back(e, s);
  }
  return canonical(std::move(m));
}

nlohmann::json PointedBackend::to_json(const Morphism& m) const {
  nlohmann::json outs = nlohmann::json::array(), effs = nlohmann::json::array(),
                 scs = nlohmann::json::array();
  for (const auto& o : m.outputs) {
    if (auto i = std::get_if<std::size_t>(&o)) outs.push_back(*i);
    else outs.push_back(std::get<std::string>(o));
  }
  for (const auto& e : m.effects) {
    if (e.empty()) effs.push_back(nullptr);
    else effs.push_back(e);
  }
  for (const auto& [e, s] : m.scalars) scs.push_back({e, s});
  return {{"outputs", outs}, {"effects", effs}, {"scalars", scs}};
}

Term PointedBackend::to_term(const Morphism& m) const {
  const ObjectWord a{object_};
  // Inputs reordered as: wired inputs in output order, then discarded ones.
  std::vector<std::size_t> wired_outputs, state_outputs, order, dropped;
  for (std::size_t p = 0; p < m.outputs.size(); ++p) {
    if (auto i = std::get_if<std::size_t>(&m.outputs[p])) {
      order.push_back(*i);
      wired_outputs.push_back(p);
    } else {
      state_outputs.push_back(p);
    }
  }
  for (std::size_t i = 0; i < m.inputs; ++i)
    if (!m.effects[i].empty()) {
      order.push_back(i);
      dropped.push_back(i);
    }
  auto is_sorted_order = [](const std::vector<std::size_t>& o) {
    for (std::size_t k = 0; k < o.size(); ++k)
      if (o[k] != k) return false;
    return true;
  };
  std::optional<Term> middle;
  auto put = [&](Term piece) { middle = middle ? *middle * piece : piece; };
  if (!wired_outputs.empty()) put(Term::identity(power(wired_outputs.size())));
  for (auto i : dropped) put(Term::generator(m.effects[i]));
  for (auto p : state_outputs) put(Term::generator(std::get<std::string>(m.outputs[p])));
  for (const auto& [e, s] : m.scalars) put(Term::generator(s) >> Term::generator(e));
  Term t = middle ? *middle : Term::identity(ObjectWord{});
  if (!is_sorted_order(order))
    t = permutation_term(std::vector<ObjectWord>(m.inputs, a), order) >> t;
  // Items now sit as wired outputs then state outputs; put each at its slot.
  std::vector<std::size_t> items = wired_outputs;
  items.insert(items.end(), state_outputs.begin(), state_outputs.end());
  std::vector<std::size_t> final_order(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) final_order[items[k]] = k;
  if (!is_sorted_order(final_order))
    t = t >> permutation_term(std::vector<ObjectWord>(items.size(), a), final_order);
  return t;
}

std::string PointedBackend::render(const Morphism& m) const {
  return to_term(m).str();
}

Signature PointedBackend::signature() const {
  Signature s;
  const ObjectWord a{object_};
  for (const auto& st : states_) s.generators[st] = {ObjectWord{}, a};
  for (const auto& e : effects_) s.generators[e] = {a, ObjectWord{}};
  return s;
}

ObjectEnumeration PointedBackend::enumerate_objects(const Bound& bound) const {
  return {words_up_to({object_}, bound.word_length, false), false};
}

HomEnumeration<PointedBackend::Morphism> PointedBackend::enumerate_hom(
    const ObjectWord& x, const ObjectWord& y, const Bound& bound) const {
  const std::size_t n = arity(x), k = arity(y);
  HomEnumeration<Morphism> out;
  std::set<std::string> seen;
  bool truncated = false;
  auto emit = [&](Morphism m) {
    m = canonical(std::move(m));
    if (!seen.insert(to_json(m).dump()).second) return;
    if (out.morphisms.size() >= bound.hom_limit) {
      truncated = true;
      return;
    }
    out.morphisms.push_back(std::move(m));
  };

  std::vector<std::pair<std::string, std::string>> free_scalars;
  for (const auto& e : effects_)
    for (const auto& s : states_)
      if (!cancels(e, s)) free_scalars.emplace_back(e, s);

  Morphism cur;
  cur.inputs = n;
  cur.effects.assign(n, "");
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> close_inputs = [&](std::size_t i) {
    if (i == n) {
      emit(cur);
      // Hom-sets with a free scalar are infinite; sample one scalar deep.
      for (const auto& sc : free_scalars) {
        Morphism with = cur;
        with.scalars.push_back(sc);
        emit(std::move(with));
      }
      return;
    }
    if (used[i]) return close_inputs(i + 1);
    for (const auto& e : effects_) {
      cur.effects[i] = e;
      close_inputs(i + 1);
    }
    cur.effects[i].clear();
  };
  std::function<void(std::size_t)> fill_outputs = [&](std::size_t p) {
    if (p == k) return close_inputs(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.outputs.emplace_back(i);
      fill_outputs(p + 1);
      cur.outputs.pop_back();
      used[i] = false;
    }
    for (const auto& s : states_) {
      cur.outputs.emplace_back(s);
      fill_outputs(p + 1);
      cur.outputs.pop_back();
    }
  };
  fill_outputs(0);
  out.complete = free_scalars.empty() && !truncated;
  return out;
}

}  // namespace combs
