#include "cacti/suites.hpp"

#include <stdexcept>

#include "cacti/action.hpp"
#include "cacti/cosimplicial.hpp"
#include "cacti/fms.hpp"
#include "cacti/instances.hpp"

namespace cacti::suites {

using operad::AxiomBudget;
using operad::CheckReport;
using operad::FiniteMonoid;

namespace {

AxiomBudget budget_of(const SuiteOptions& opt)
{
    AxiomBudget b;
    b.seed = opt.seed;
    b.samples = opt.samples;
    b.max_arity = opt.max_arity;
    return b;
}

void add(CheckReport& total, CheckReport part, const std::string& name)
{
    part.name = name;
    total.merge(part);
}

kernel::RandomFMSOptions fms_options(bool framed)
{
    kernel::RandomFMSOptions o;
    o.framed = framed;
    return o;
}

CheckReport operad_suite(const SuiteOptions& opt)
{
    CheckReport r{"operad"};
    const auto b = budget_of(opt);
    const auto fms = kernel::fms_instance();
    add(r, operad::check_operad_axioms(fms, kernel::fms_domain(fms_options(false)), b), "MS");
    add(r, operad::check_operad_axioms(fms, kernel::fms_domain(fms_options(true)), b), "fMS");
    add(r, fms_round_trip(opt), "fMS round trip");
    add(r, operad::check_operad_axioms(operad::correspondence_instance(3), operad::correspondence_domain(3), b), "lX");
    const auto s3 = FiniteMonoid::symmetric_group_3();
    add(r, operad::check_operad_axioms(operad::monoid_instance(s3, true), operad::monoid_domain(s3), b), "S3");
    add(r, operad::check_operad_axioms(operad::free_operad_instance(), operad::free_domain(), b), "free");
    return r;
}

CheckReport symmetric_suite(const SuiteOptions& opt)
{
    CheckReport r{"symmetric"};
    const auto b = budget_of(opt);
    const auto fms = kernel::fms_instance();
    add(r, operad::check_symmetric_axioms(fms, kernel::fms_domain(fms_options(false)), b), "MS");
    add(r, operad::check_symmetric_axioms(fms, kernel::fms_domain(fms_options(true)), b), "fMS");
    const auto s3 = FiniteMonoid::symmetric_group_3();
    add(r, operad::check_symmetric_axioms(operad::monoid_instance(s3, true), operad::monoid_domain(s3), b), "S3");
    add(r, operad::check_symmetric_axioms(operad::assoc_instance(), operad::assoc_domain(), b), "Ass");
    return r;
}

CheckReport multiplication_suite()
{
    CheckReport r{"multiplication"};
    add(r, operad::check_multiplication_axioms(operad::free_operad_instance()), "free");
    for (const auto& m : {FiniteMonoid::cyclic_group(2), FiniteMonoid::two_element_monoid(), FiniteMonoid::symmetric_group_3()})
        add(r, operad::check_multiplication_axioms(operad::monoid_instance(m, false)), "monoid of order " + std::to_string(m.size()));
    add(r, operad::check_multiplication_axioms(operad::correspondence_instance(3)), "lX");
    add(r, operad::check_multiplication_axioms(operad::assoc_instance()), "Ass");
    return r;
}

CheckReport cyclic_suite(const SuiteOptions& opt)
{
    CheckReport r{"cyclic"};
    const auto b = budget_of(opt);
    const auto s3 = FiniteMonoid::symmetric_group_3();
    add(r, operad::check_cyclic_axioms(operad::monoid_instance(s3, true), operad::monoid_domain(s3), b), "S3");
    add(r, operad::check_cyclic_axioms(operad::free_operad_instance(), operad::free_domain(), b), "free");
    add(r, operad::check_cyclic_axioms(operad::correspondence_instance(3), operad::correspondence_domain(3), b), "lX");
    add(r, operad::check_cyclic_axioms(operad::assoc_instance(), operad::assoc_domain(), b), "Ass");
    return r;
}

CheckReport cosimplicial_suite(const SuiteOptions& opt)
{
    using namespace cosimplicial;
    CheckReport r{"cosimplicial"};
    const auto b = budget_of(opt);
    const int deg = opt.max_arity;
    for (const auto& m : {FiniteMonoid::cyclic_group(2), FiniteMonoid::two_element_monoid(), FiniteMonoid::cyclic_group(3)})
        add(r, relation_suite(build_cosimplicial(operad::monoid_instance(m, false)), operad::monoid_domain(m), deg, b),
            "monoid of order " + std::to_string(m.size()));
    const auto s3 = FiniteMonoid::symmetric_group_3();
    add(r, relation_suite(build_cocyclic(operad::monoid_instance(s3, true)), operad::monoid_domain(s3), deg, b), "S3 cocyclic");
    add(r, relation_suite(build_cocyclic(operad::correspondence_instance(3)), operad::correspondence_domain(3), deg, b), "lX cocyclic");
    add(r, relation_suite(build_cocyclic(operad::free_operad_instance()), operad::free_domain(), deg, b), "free cocyclic");
    return r;
}

CheckReport action_suite(const SuiteOptions& opt)
{
    CheckReport r{"action"};
    for (auto mode : {action::Mode::Plain, action::Mode::Cyclic}) {
        action::ActionCheckOptions a;
        a.mode = mode;
        a.configurations = opt.samples;
        a.max_arity = opt.max_arity;
        a.max_degree = opt.max_arity;
        a.seed = opt.seed;
        add(r, action::verify_action(a), mode == action::Mode::Plain ? "plain" : "cyclic");
    }
    return r;
}

}  // namespace

const std::vector<std::string>& names()
{
    static const std::vector<std::string> n{"operad", "symmetric", "multiplication", "cyclic", "cosimplicial", "action"};
    return n;
}

CheckReport run(const std::string& name, const SuiteOptions& opt)
{
    if (opt.samples < 1 || opt.max_arity < 0) throw std::invalid_argument("samples must be positive and max arity nonnegative");
    if (name == "operad") return operad_suite(opt);
    if (name == "symmetric") return symmetric_suite(opt);
    if (name == "multiplication") return multiplication_suite();
    if (name == "cyclic") return cyclic_suite(opt);
    if (name == "cosimplicial") return cosimplicial_suite(opt);
    if (name == "action") return action_suite(opt);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

CheckReport fms_round_trip(const SuiteOptions& opt)
{
    CheckReport r{"fMS round trip"};
    std::mt19937_64 rng(opt.seed + 7);
    for (int n = 0; n <= opt.max_arity; ++n)
        for (int s = 0; s < opt.samples; ++s) {
            const auto e = kernel::random_fms(n, rng, fms_options(s % 2 == 1));
            ++r.checks;
            if (!(kernel::factorize(kernel::to_map(e)) == e)) r.fail("factorize(to_map(e)) != e for " + kernel::to_string(e));
        }
    r.exhaustive = false;
    return r;
}

}  // namespace cacti::suites
