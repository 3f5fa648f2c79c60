//! Claim checkers for cyclic, dicyclic and p-group power graphs.

use serde_json::json;

use super::{run_claim, ClaimReport};
use crate::arith::{factorize, is_power_of_two, is_prime_power, phi};
use crate::connectivity::{is_separating, vertex_connectivity};
use crate::graph::{
    complement, components, is_complete, power_graph, proper_power_graph, reduced_cyclic_graph,
};
use crate::group::{cyclic_group, dicyclic_group, FiniteGroup};
use crate::pgroup::{
    check_multiple_with, check_node_forms, classify_with, decompose_with, tree_charpoly,
    tree_graph, NodeFormCheck, PGroupClasses,
};
use crate::spectra::{
    algebraic_connectivity, spectral_radius, spectral_radius_multiplicity, spectrum,
    FactoredCharPoly, SpectralValue, Spectrum,
};

fn same(a: SpectralValue, b: SpectralValue) -> bool {
    match (a, b) {
        (SpectralValue::Integer(x), SpectralValue::Integer(y)) => x == y,
        _ => (a.as_f64() - b.as_f64()).abs() < 1e-8,
    }
}

fn cyclic_spectrum(n: usize) -> crate::Result<(crate::graph::Graph, Spectrum)> {
    let g = power_graph(&cyclic_group(n)?);
    let s = spectrum(&g);
    Ok((g, s))
}

/// `μ(G(Z_n)) = φ(n) + 1` exactly when `n` is prime or a product of two
/// distinct primes.
pub fn check_cyclic_algcon(n: usize) -> ClaimReport {
    run_claim("cyclic-algcon", json!({ "n": n }), |l| {
        if n < 2 {
            l.inapplicable("needs n >= 2");
            return Ok(());
        }
        let (_, s) = cyclic_spectrum(n)?;
        let mu = algebraic_connectivity(&s)?;
        let f = factorize(n as u64)?;
        let target = phi(n as u64) + 1;
        let attained = mu == SpectralValue::Integer(target);
        let predicate = f.is_prime() || f.is_product_of_two_distinct_primes();
        l.record("algebraic_connectivity", mu);
        l.record("phi_plus_one", target);
        l.record("prime_or_two_distinct_primes", predicate);
        l.require(attained == predicate, || {
            format!(
                "n = {n}: algebraic connectivity {mu}, phi(n)+1 = {target}, predicate {predicate}"
            )
        });
        Ok(())
    })
}

/// The multiplicity of `n` in `G(Z_n)` is `φ(n) + 1` exactly when `n = 4` or
/// `n` is not a prime power; the spectrum splits into `n` repeated `φ(n) + 1`
/// times and the spectrum of `G'(Z_n)` shifted by `φ(n) + 1`.
pub fn check_cyclic_radius_mult(n: usize) -> ClaimReport {
    run_claim("cyclic-radius-mult", json!({ "n": n }), |l| {
        if n < 2 {
            l.inapplicable("needs n >= 2");
            return Ok(());
        }
        let (_, s) = cyclic_spectrum(n)?;
        let k = phi(n as u64) + 1;
        let mult = s.multiplicity(n as u64);
        let predicate = n == 4 || !is_prime_power(n as u64);
        l.record("radius", spectral_radius(&s)?);
        l.record("radius_multiplicity", mult);
        l.record("phi_plus_one", k);
        l.record("four_or_not_prime_power", predicate);
        l.require((mult == k) == predicate, || {
            format!("n = {n}: multiplicity of n is {mult}, phi(n)+1 = {k}, predicate {predicate}")
        });
        l.require(
            spectral_radius(&s)? == SpectralValue::Integer(n as u64),
            || format!("n = {n}: spectral radius is not n"),
        );

        let values = s.values();
        let reduced = spectrum(&reduced_cyclic_graph(n)?).values();
        let k = k as usize;
        let top_ok = values[..k.min(n - 1)]
            .iter()
            .all(|&v| v == SpectralValue::Integer(n as u64));
        l.require(top_ok, || {
            format!("n = {n}: top phi(n)+1 eigenvalues are not all n")
        });
        // λ_i(G) = λ_{i−φ(n)−1}(G') + φ(n) + 1 for φ(n)+2 ≤ i ≤ n−1
        for i in k + 1..n {
            let lhs = values[i - 1];
            let rhs = match reduced[i - k - 1] {
                SpectralValue::Integer(x) => SpectralValue::Integer(x + k as u64),
                SpectralValue::Real(x) => SpectralValue::Real(x + k as f64),
            };
            l.require(same(lhs, rhs), || {
                format!("n = {n}: lambda_{i} = {lhs} but shifted reduced eigenvalue is {rhs}")
            });
        }
        l.require(values[n - 1] == SpectralValue::Integer(0), || {
            format!("n = {n}: smallest eigenvalue is not 0")
        });
        l.record("block_structure_checked", n > k);
        Ok(())
    })
}

/// `κ(G(Z_n)) = μ(G(Z_n))` exactly when `n` is a product of two distinct
/// primes.
pub fn check_cyclic_kappa_eq_mu(n: usize) -> ClaimReport {
    run_claim("cyclic-kappa-mu", json!({ "n": n }), |l| {
        if n < 2 {
            l.inapplicable("needs n >= 2");
            return Ok(());
        }
        let (g, s) = cyclic_spectrum(n)?;
        let mu = algebraic_connectivity(&s)?;
        let cut = vertex_connectivity(&g);
        let equal = mu == SpectralValue::Integer(cut.size as u64);
        let predicate = factorize(n as u64)?.is_product_of_two_distinct_primes();
        l.record("kappa", cut.size);
        l.record("separating_set", &cut.separating_set);
        l.record("algebraic_connectivity", mu);
        l.record("two_distinct_primes", predicate);
        l.require(is_separating(&g, &cut.separating_set), || {
            format!("n = {n}: reported separating set does not separate")
        });
        l.require(equal == predicate, || {
            format!(
                "n = {n}: kappa {} vs algebraic connectivity {mu}, predicate {predicate}",
                cut.size
            )
        });
        Ok(())
    })
}

/// `G(Z_n)` is complete exactly for prime powers, and for composite `n` the
/// graph `G'(Z_n)` is disconnected exactly when `n` is a product of two
/// distinct primes.
pub fn check_cyclic_structure(n: usize) -> ClaimReport {
    run_claim("cyclic-structure", json!({ "n": n }), |l| {
        if n < 2 {
            l.inapplicable("needs n >= 2");
            return Ok(());
        }
        let f = factorize(n as u64)?;
        let complete = is_complete(&power_graph(&cyclic_group(n)?));
        l.record("complete", complete);
        l.require(complete == f.is_prime_power(), || {
            format!(
                "n = {n}: complete = {complete}, prime power = {}",
                f.is_prime_power()
            )
        });
        if !f.is_prime() {
            let r = reduced_cyclic_graph(n)?;
            let disconnected = components(&r).len() > 1;
            l.record("reduced_vertices", r.vertex_count());
            l.record("reduced_disconnected", disconnected);
            l.require(r.vertex_count() == n - phi(n as u64) as usize - 1, || {
                format!("n = {n}: G'(Z_n) has {} vertices", r.vertex_count())
            });
            l.require(
                disconnected == f.is_product_of_two_distinct_primes(),
                || format!("n = {n}: G'(Z_n) disconnected = {disconnected}"),
            );
        }
        Ok(())
    })
}

/// Closed-form spectrum of `G(Q_{2^{α−1}})`; value collisions merge.
fn quaternion_closed_form(n: usize) -> FactoredCharPoly {
    let n = n as u64;
    FactoredCharPoly::from_pairs([(0, 1), (2, n), (4, n), (2 * n, 2 * n - 3), (4 * n, 2)])
}

/// The dicyclic bundle: `1 < μ ≤ 2` with 2 an eigenvalue; multiplicity of
/// `4n` is 2 for generalized quaternion groups and 1 otherwise; the five
/// statements (κ = μ, μ = 2, μ integral, Laplacian integral, n a power of 2)
/// agree; `a^n` is universal exactly for powers of 2; the closed-form
/// spectrum for powers of 2; `{e, a^n}` separates and, when κ = μ, the graph
/// is `(G − {e, a^n}) ∨ K_2`.
pub fn check_dicyclic_bundle(n: usize) -> ClaimReport {
    run_claim("dicyclic", json!({ "n": n }), |l| {
        if n < 2 {
            l.inapplicable("needs n >= 2");
            return Ok(());
        }
        let q = dicyclic_group(n)?;
        let g = power_graph(&q);
        let s = spectrum(&g);
        let order = 4 * n;
        let an = n;
        let gq = is_power_of_two(n as u64);

        // (a) bounds
        let mu = algebraic_connectivity(&s)?;
        let above_one = match mu {
            SpectralValue::Integer(x) => x > 1,
            SpectralValue::Real(x) => x > 1.0 + 1e-8,
        };
        let at_most_two = match mu {
            SpectralValue::Integer(x) => x <= 2,
            SpectralValue::Real(x) => x <= 2.0 + 1e-8,
        };
        let two_mult = s.multiplicity(2);
        l.record("algebraic_connectivity", mu);
        l.record("multiplicity_of_2", two_mult);
        l.require(above_one && at_most_two, || {
            format!("n = {n}: algebraic connectivity {mu} outside (1, 2]")
        });
        l.require(two_mult > 0, || format!("n = {n}: 2 is not an eigenvalue"));

        // (b) radius multiplicity
        let radius = spectral_radius(&s)?;
        let mult = spectral_radius_multiplicity(&s)?;
        l.record("radius", radius);
        l.record("radius_multiplicity", mult);
        l.require(radius == SpectralValue::Integer(order as u64), || {
            format!("n = {n}: spectral radius {radius} is not {order}")
        });
        l.require(mult == if gq { 2 } else { 1 }, || {
            format!("n = {n}: multiplicity of {order} is {mult}")
        });

        // (c) five statements
        let cut = vertex_connectivity(&g);
        let statements = [
            mu == SpectralValue::Integer(cut.size as u64),
            mu == SpectralValue::Integer(2),
            mu.is_integer(),
            s.is_laplacian_integral(),
            gq,
        ];
        l.record("kappa", cut.size);
        l.record("separating_set", &cut.separating_set);
        l.record("statements", statements);
        l.require(statements.iter().all(|&b| b == statements[0]), || {
            format!("n = {n}: statements disagree {statements:?}")
        });
        l.require(cut.size == 2, || format!("n = {n}: kappa = {}", cut.size));
        l.require(is_separating(&g, &[0, an]), || {
            format!("n = {n}: {{e, a^n}} does not separate")
        });

        // (d) a^n universal
        let universal = g.degree(an) == order - 1;
        l.record("a_n_universal", universal);
        l.require(universal == gq, || {
            format!("n = {n}: a^n universal = {universal}")
        });

        // complement components: three for powers of 2, two otherwise
        let comp = components(&complement(&g)).len();
        l.record("complement_components", comp);
        l.require(comp == if gq { 3 } else { 2 }, || {
            format!("n = {n}: complement has {comp} components")
        });

        // (e) closed form
        if gq {
            let want = quaternion_closed_form(n);
            l.require(s.as_exact() == Some(&want), || {
                format!(
                    "n = {n}: spectrum {:?} differs from closed form {want}",
                    s.exact_part()
                )
            });
        }

        // (f) join decomposition when κ = μ
        if statements[0] {
            let rest: Vec<usize> = (0..order).filter(|&v| v != 0 && v != an).collect();
            let rest_graph = crate::graph::induced_subgraph(&g, &rest)?;
            let joined =
                g.has_edge(0, an) && rest.iter().all(|&v| g.has_edge(0, v) && g.has_edge(an, v));
            let rest_disconnected = components(&rest_graph).len() > 1;
            l.record("join_decomposition", joined && rest_disconnected);
            l.require(joined && rest_disconnected, || {
                format!(
                    "n = {n}: G(Q_n) is not (G - {{e, a^n}}) v K_2 with a disconnected first part"
                )
            });
        }
        Ok(())
    })
}

/// The p-group bundle: algebraic connectivity, radius multiplicity and
/// κ = μ characterizations; Laplacian integrality with every eigenvalue
/// classified; the divisibility properties; the per-node eigenvalue forms;
/// the order-`p^2` closed forms; and agreement of the recursive
/// decomposition with the direct spectrum.
pub fn check_pgroup_bundle(group: &FiniteGroup) -> ClaimReport {
    let params = json!({ "group": group.label(), "order": group.order() });
    run_claim("pgroup", params, |l| {
        let Some(p) = group.is_p_group() else {
            l.inapplicable(format!("{} is not a p-group", group.label()));
            return Ok(());
        };
        let n = group.order();
        let g = power_graph(group);
        let s = spectrum(&g);
        let data = PGroupClasses::new(group)?;
        let cyclic = group.is_cyclic();
        let gq = group.is_generalized_quaternion();
        l.record("prime", p);
        l.record("cyclic", cyclic);
        l.record("generalized_quaternion", gq);
        l.record("spectrum", &s);

        // (c) integrality and classification
        l.require(s.is_laplacian_integral(), || {
            format!("{}: spectrum is not integral", group.label())
        });
        if s.is_laplacian_integral() {
            let forms = classify_with(group, &data, &s)?;
            for f in forms.iter().filter(|f| !f.is_classified()) {
                l.require(false, || {
                    format!("{}: eigenvalue {} has no form", group.label(), f.value)
                });
            }
            l.record("forms", &forms);
            for v in check_multiple_with(group, &data, &s)? {
                l.require(false, || format!("{}: {v}", group.label()));
            }
        }

        // (a), (b)
        let mu = algebraic_connectivity(&s)?;
        let mult = spectral_radius_multiplicity(&s)?;
        let cut = vertex_connectivity(&g);
        l.record("algebraic_connectivity", mu);
        l.record("radius_multiplicity", mult);
        l.record("kappa", cut.size);
        if n >= 3 {
            let a = mu == SpectralValue::Integer(1);
            let b = mult == 1;
            let c = !cyclic && !gq;
            l.require(a == b && b == c, || {
                format!(
                    "{}: mu = 1 is {a}, radius multiplicity 1 is {b}, neither cyclic nor GQ is {c}",
                    group.label()
                )
            });
            l.require((mu == SpectralValue::Integer(1)) == (cut.size == 1), || {
                format!("{}: mu = {mu} but kappa = {}", group.label(), cut.size)
            });
        }
        let kappa_eq = mu == SpectralValue::Integer(cut.size as u64);
        l.require(kappa_eq == !cyclic, || {
            format!(
                "{}: kappa = {} and mu = {mu} for cyclic = {cyclic}",
                group.label(),
                cut.size
            )
        });
        l.require(
            spectral_radius(&s)? == SpectralValue::Integer(n as u64),
            || format!("{}: spectral radius is not |G|", group.label()),
        );

        // proper power graph: connected iff cyclic or GQ; shift identity;
        // the component of an order-p element is U(g)
        let star = proper_power_graph(group)?;
        let parts = components(&star);
        l.require((parts.len() == 1) == (cyclic || gq), || {
            format!(
                "{}: proper power graph has {} components",
                group.label(),
                parts.len()
            )
        });
        let star_values = spectrum(&star).values();
        let values = s.values();
        for i in 2..n {
            let lhs = values[i - 1];
            let rhs = star_values[i - 2];
            l.require((lhs.as_f64() - rhs.as_f64() - 1.0).abs() < 1e-8, || {
                format!(
                    "{}: lambda_{i} = {lhs} but proper graph gives {rhs} + 1",
                    group.label()
                )
            });
        }
        for part in &parts {
            let members: Vec<usize> = part
                .iter()
                .map(|&v| if v < group.identity() { v } else { v + 1 })
                .collect();
            if let Some(&x) = members.iter().find(|&&x| data.order_of(x) == p) {
                let up = group.up_set(x)?;
                l.require(up == members, || {
                    format!(
                        "{}: component of {} is not U(g)",
                        group.label(),
                        group.element_label(x)
                    )
                });
            }
        }

        // (e) decomposition
        let tree = decompose_with(group, &data);
        l.record("decomposition", tree.to_string());
        for node in tree.nodes() {
            l.require(node.vertex_count() == node.up_size, || {
                format!(
                    "{}: node {} has {} vertices but |U| = {}",
                    group.label(),
                    node.label,
                    node.vertex_count(),
                    node.up_size
                )
            });
        }
        let structural = tree_charpoly(&tree)?;
        l.require(s.as_exact() == Some(&structural), || {
            format!(
                "{}: recursive polynomial {structural} differs from direct spectrum",
                group.label()
            )
        });
        let built = tree_graph(&tree);
        let mut d1 = built.degrees();
        let mut d2 = g.degrees();
        d1.sort_unstable();
        d2.sort_unstable();
        l.require(d1 == d2, || {
            format!(
                "{}: materialized tree degree sequence differs",
                group.label()
            )
        });
        l.require(spectrum(&built) == s, || {
            format!("{}: materialized tree spectrum differs", group.label())
        });

        let mut inapplicable_nodes = 0;
        for (el, check) in check_node_forms(group, &data, &tree)? {
            match check {
                NodeFormCheck::Holds => {}
                NodeFormCheck::Inapplicable => inapplicable_nodes += 1,
                NodeFormCheck::Violated { eigenvalue } => l.require(false, || {
                    format!(
                        "{}: eigenvalue {eigenvalue} of Gamma({}) has no allowed form",
                        group.label(),
                        group.element_label(el)
                    )
                }),
            }
        }
        l.record("inapplicable_nodes", inapplicable_nodes);

        // (d) order p^2
        if n as u64 == p * p {
            let complete = FactoredCharPoly::from_pairs([(0, 1), (p * p, p * p - 1)]);
            let split =
                FactoredCharPoly::from_pairs([(0, 1), (1, p), (p, (p + 1) * (p - 2)), (p * p, 1)]);
            let want = if cyclic { &complete } else { &split };
            l.require(s.as_exact() == Some(want), || {
                format!("{}: order p^2 spectrum is not {want}", group.label())
            });
        }
        Ok(())
    })
}
