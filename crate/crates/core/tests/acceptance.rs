//! Acceptance criteria, one line per criterion. Run with
//! `cargo test --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use taftlie::classify::{are_isomorphic_family, classify, extract_gamma, Case};
use taftlie::codim::{codimension, is_h_identity, HWord, DEFAULT_BUDGET};
use taftlie::construct::{
    build_l_alpha, build_l_gamma, iso_equivdef, verify_iso, Family, FamilyParams,
};
use taftlie::cyclotomic::{gaussian_binomial, q_binom, CycNum, CyclotomicField, Field};
use taftlie::exactla::{operator_algebra_dim, operator_algebra_dim_exact, unit_vector, Mat, Vector};
use taftlie::hmod::{make_dual_idempotent_example, HModuleLie};
use taftlie::hopf::{make_taft, make_trivial};
use taftlie::liealg::{make_sl, LieAlgebra};
use taftlie::report::Status;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(m: usize) -> Field {
    CyclotomicField::get(m).unwrap()
}

/// Quantum integer as the literal sum `1 + ζ + … + ζ^{n-1}`.
fn oracle_qint(f: &Field, n: usize) -> CycNum {
    (0..n).fold(f.zero(), |acc, i| &acc + &f.zeta_pow(i as i64))
}

fn oracle_qbinom(f: &Field, n: usize, k: usize) -> CycNum {
    let fact = |x: usize| (1..=x).fold(f.one(), |acc, i| &acc * &oracle_qint(f, i));
    fact(n).try_div(&(&fact(k) * &fact(n - k))).unwrap()
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for m in 2..=12 {
        let f = field(m);
        let z = f.zeta();
        for k in 1..m {
            for l in 1..m - k {
                let lhs = &(&z.pow(k as u32) * &q_binom(&f, k + l - 1, k).unwrap())
                    + &q_binom(&f, k + l - 1, k - 1).unwrap();
                let rhs = q_binom(&f, k + l, k).unwrap();
                ensure(lhs == rhs, || format!("m={m} k={k} l={l}: Pascal identity"))?;
                ensure(rhs == oracle_qbinom(&f, k + l, k), || format!("m={m} k={k} l={l}: oracle"))?;
                count += 1;
            }
            // At k + l = m the right side is the vanishing binomial (m choose k)_ζ.
            let l = m - k;
            let lhs = &(&z.pow(k as u32) * &gaussian_binomial(&z, m - 1, k)) + &gaussian_binomial(&z, m - 1, k - 1);
            ensure(lhs.is_zero() && gaussian_binomial(&z, m, k).is_zero(), || {
                format!("m={m} k={k} l={l}: boundary")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn criterion_2() -> Outcome {
    for m in 2..=6 {
        let h = make_taft(m).map_err(|e| e.to_string())?;
        let r = h.verify_hopf_axioms();
        for name in [
            "coassociativity",
            "counit",
            "antipode",
            "coproduct_multiplicative",
            "counit_multiplicative",
        ] {
            ensure(r.status_of(name) == Some(Status::Pass), || format!("m={m}: {name}"))?;
        }
        ensure(r.passed(), || format!("m={m}: {:?}", r.failures().next()))?;
    }
    Ok("m = 2..6".into())
}

fn scalars(f: &Field) -> Vec<(String, CycNum)> {
    vec![
        ("0".into(), f.zero()),
        ("1".into(), f.one()),
        ("zeta".into(), f.zeta()),
        ("2".into(), f.from_int(2)),
    ]
}

struct CorpusEntry {
    name: String,
    module: HModuleLie,
    v_nonzero: bool,
}

fn corpus() -> Result<Vec<CorpusEntry>, String> {
    let mut out = Vec::new();
    for m in [2usize, 3] {
        let f = field(m);
        for bn in [2usize, 3] {
            let b = make_sl(bn, &f).map_err(|e| e.to_string())?;
            for (sname, s) in scalars(&f) {
                for family in [Family::LAlpha, Family::LGamma] {
                    let p = FamilyParams::new(family, b.clone(), m, s.clone()).map_err(|e| e.to_string())?;
                    let module = p.build().map_err(|e| format!("{} sl{bn} m={m} {sname}: {e}", family.name()))?;
                    out.push(CorpusEntry {
                        name: format!("{}(sl{bn}, m={m}, {sname})", family.name()),
                        v_nonzero: !module.v_is_zero(),
                        module,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn criterion_3(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let r = e.module.verify_module_axioms();
        for name in ["c^m = 1", "v^m = 0", "vc = ζcv", "v skew-derivation", "module algebra", "representation"] {
            ensure(r.status_of(name) == Some(Status::Pass), || format!("{}: {name}", e.name))?;
        }
        ensure(r.passed(), || format!("{}: {:?}", e.name, r.failures().next()))?;
        ensure(e.module.lie().check_lie_axioms().passed(), || format!("{}: Lie axioms", e.name))?;
    }
    Ok(format!("{} algebras", corpus.len()))
}

/// One application of the defining formula for `v` on a tuple.
fn oracle_v(alpha: &CycNum, tuple: &[Vector]) -> Vec<Vector> {
    let f = alpha.field().clone();
    let m = tuple.len();
    (0..m)
        .map(|k| {
            let prev = &tuple[(k + m - 1) % m];
            let s = alpha * &f.zeta_pow(k as i64);
            tuple[k].iter().zip(prev).map(|(a, b)| &s * &(a - b)).collect()
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for m in [2usize, 3, 4] {
        let f = field(m);
        let b = make_sl(2, &f).unwrap();
        let d = b.dim();
        for alpha in [f.one(), f.from_int(2), f.zeta(), &f.one() + &f.zeta()] {
            let module = build_l_alpha(&b, m, &alpha).map_err(|e| e.to_string())?;
            for basis in 0..m * d {
                let flat = unit_vector(&f, m * d, basis);
                let tuple: Vec<Vector> = flat.chunks(d).map(<[CycNum]>::to_vec).collect();
                let mut iterated = tuple.clone();
                for ell in 0..=m {
                    let closed = taftlie::construct::v_power_closed_form(&alpha, ell, &tuple).map_err(|e| e.to_string())?;
                    ensure(closed == iterated, || format!("m={m} alpha={alpha} basis={basis} ell={ell}"))?;
                    let via_matrix = taftlie::construct::v_power_iterated(&module, ell, &tuple).unwrap();
                    ensure(via_matrix == iterated, || format!("matrix m={m} basis={basis} ell={ell}"))?;
                    iterated = oracle_v(&alpha, &iterated);
                    count += 1;
                }
                ensure(taftlie::construct::is_zero_tuple(&taftlie::construct::v_power_closed_form(&alpha, m, &tuple).unwrap()), || {
                    format!("v^m != 0 at m={m}")
                })?;
            }
        }
    }
    Ok(format!("{count} comparisons"))
}

fn criterion_5(corpus: &[CorpusEntry]) -> Outcome {
    let required = [
        "skew symmetry of v in brackets",
        "v of a homogeneous bracket",
        "triple commutator identity",
        "long commutator identity",
        "ker v = L^(0)",
        "v L^(k) = L^(k-1)",
        "v kills L^(0)",
        "v lowers degree",
    ];
    let mut n = 0;
    for e in corpus.iter().filter(|e| e.v_nonzero) {
        let r = e.module.verify_graded_lemmas().map_err(|x| x.to_string())?;
        for name in required {
            ensure(r.status_of(name) == Some(Status::Pass), || {
                format!("{}: {name} is {:?}", e.name, r.status_of(name))
            })?;
        }
        ensure(r.passed(), || format!("{}: {:?}", e.name, r.failures().next()))?;
        n += 1;
    }
    Ok(format!("{n} algebras with v != 0"))
}

fn criterion_6(corpus: &[CorpusEntry]) -> Outcome {
    let limit = Duration::from_secs(60);
    let mut slowest = Duration::ZERO;
    for e in corpus {
        let t = Instant::now();
        let n = e.module.dim();
        let mut gens = e.module.lie().ad_matrices();
        gens.extend(e.module.generator_matrices());
        let d = operator_algebra_dim_exact(e.module.field(), n, &gens);
        let el = t.elapsed();
        let certified = operator_algebra_dim(e.module.field(), n, &gens).map_err(|x| x.to_string())?;
        ensure(certified == d, || format!("{}: modular {certified} vs exact {d}", e.name))?;
        slowest = slowest.max(el);
        ensure(d == n * n, || format!("{}: algebra dim {d} != {}", e.name, n * n))?;
        ensure(el < limit, || format!("{}: {el:?}", e.name))?;
        ensure(e.module.is_h_simple().is_absolutely_simple(), || format!("{}: is_h_simple", e.name))?;
    }
    let sl2 = corpus.iter().find(|e| e.name == "L_alpha(sl2, m=2, 1)").unwrap();
    let mut gens = sl2.module.lie().ad_matrices();
    gens.extend(sl2.module.generator_matrices());
    ensure(operator_algebra_dim(sl2.module.field(), 6, &gens).unwrap() == 36, || "sl2 m=2: 36".into())?;
    Ok(format!("slowest {:.2}s", slowest.as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    let iso = iso_equivdef(&sl2, 2, &f.one()).map_err(|e| e.to_string())?;
    let quarter = f.from_ratio(1, 4);
    ensure(iso.source == build_l_gamma(&sl2, 2, &quarter).unwrap(), || "source is not L(sl2, 1/4)".into())?;
    ensure(iso.target == build_l_alpha(&sl2, 2, &f.one()).unwrap(), || "target is not L_1(sl2)".into())?;
    let r = verify_iso(&iso);
    ensure(r.passed(), || format!("{:?}", r.failures().next()))?;
    let inv = iso.inverse().ok_or("not invertible")?;
    ensure(verify_iso(&inv).passed(), || "inverse".into())?;
    let g = extract_gamma(&build_l_alpha(&sl2, 2, &f.one()).unwrap()).map_err(|e| e.to_string())?;
    ensure(g == quarter, || format!("gamma = {g}"))?;
    Ok("gamma = 1/4".into())
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for m in [2usize, 3] {
        let f = field(m);
        let sl2 = make_sl(2, &f).unwrap();
        for a in [f.one(), f.from_int(2), f.zeta()] {
            for k in 0..m {
                let p1 = FamilyParams::new(Family::LAlpha, sl2.clone(), m, a.clone()).unwrap();
                let p2 = FamilyParams::new(Family::LAlpha, sl2.clone(), m, &a * &f.zeta_pow(k as i64)).unwrap();
                let c = are_isomorphic_family(&p1, &p2).map_err(|e| e.to_string())?;
                ensure(c.isomorphic && c.shift == Some(k), || format!("m={m} alpha={a} k={k}"))?;
                ensure(c.certificate.as_ref().is_some_and(|r| r.passed()), || "certificate".into())?;
                ensure(c.gammas.0 == c.gammas.1, || "gamma invariants differ on an orbit".into())?;
                n += 1;
            }
        }
    }
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    let p1 = FamilyParams::new(Family::LAlpha, sl2.clone(), 2, f.one()).unwrap();
    let p2 = FamilyParams::new(Family::LAlpha, sl2, 2, f.from_int(2)).unwrap();
    let c = are_isomorphic_family(&p1, &p2).map_err(|e| e.to_string())?;
    ensure(!c.isomorphic, || "(1, 2) reported isomorphic".into())?;
    ensure(
        c.gammas == (Some(f.from_ratio(1, 4)), Some(f.from_ratio(1, 16))),
        || format!("gammas {:?}", c.gammas),
    )?;
    Ok(format!("{n} orbit pairs, (1, 2) separated by 1/4 vs 1/16"))
}

fn criterion_9() -> Outcome {
    for m in [2usize, 3] {
        let f = field(m);
        let sl2 = make_sl(2, &f).unwrap();
        let module = build_l_gamma(&sl2, m, &f.zero()).unwrap();
        let r = classify(&module).map_err(|e| e.to_string())?;
        ensure(r.case == Case::NonSemisimple, || format!("m={m}: case {:?}", r.case))?;
        for name in [
            "radical is nilpotent",
            "radical is the positive part of the grading",
            "ker v = L^(0)",
            "L^(0) is a simple subalgebra",
            "t + 1 = m",
            "R = N_(t-1)",
            "dim N_k/N_(k-1) = dim ker v",
            "wrap-around branch vanishes",
        ] {
            ensure(r.certificates.status_of(name) == Some(Status::Pass), || format!("m={m}: {name}"))?;
        }
        ensure(r.t == Some(m - 1), || format!("m={m}: t = {:?}", r.t))?;
        ensure(r.b_profile == (3, 0, 3), || format!("m={m}: profile {:?}", r.b_profile))?;
    }
    Ok("m = 2, 3".into())
}

/// Rank over `Q` by plain Gaussian elimination.
fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                let (src, dst) = if r < rank {
                    let (a, b) = rows.split_at_mut(rank);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[rank], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rat(x: &CycNum) -> BigRational {
    x.to_rational().expect("rational entry")
}

/// Dense rational matrix and bracket table of an algebra over `Q(ζ_2) = Q`.
struct RationalModel {
    n: usize,
    sc: Vec<BigRational>,
    actions: Vec<Vec<BigRational>>,
}

impl RationalModel {
    fn new(lie: &LieAlgebra, actions: Vec<Vec<BigRational>>) -> Self {
        let n = lie.dim();
        let mut sc = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sc.push(rat(lie.structure_constant(i, j, k)));
                }
            }
        }
        RationalModel { n, sc, actions }
    }

    fn bracket(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let n = self.n;
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..n {
                    out[k] += &c * &self.sc[(i * n + j) * n + k];
                }
            }
        }
        out
    }

    fn act(&self, h: usize, a: usize) -> Vec<BigRational> {
        (0..self.n).map(|r| self.actions[h][r * self.n + a].clone()).collect()
    }
}

fn rational_mat(a: &Mat) -> Vec<BigRational> {
    a.entries().iter().map(rat).collect()
}

fn mat_product(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i * n + j] += &a[i * n + k] * &b[k * n + j];
            }
        }
    }
    out
}

/// Taft basis `c^i v^k` acting as products of the two generator matrices.
fn taft_actions(c: &[BigRational], v: &[BigRational], n: usize, m: usize) -> Vec<Vec<BigRational>> {
    let mut id = vec![BigRational::zero(); n * n];
    for i in 0..n {
        id[i * n + i] = BigRational::one();
    }
    let mut out = vec![Vec::new(); m * m];
    let mut ci = id.clone();
    for i in 0..m {
        let mut x = ci.clone();
        for k in 0..m {
            out[k * m + i] = x.clone();
            x = mat_product(&x, v, n);
        }
        ci = mat_product(&ci, c, n);
    }
    out
}

/// Degree 1 and 2 evaluation ranks from the rational model.
fn oracle_codim(model: &RationalModel, hdim: usize, n_deg: usize) -> usize {
    let n = model.n;
    let mut rows = Vec::new();
    match n_deg {
        1 => {
            for h in 0..hdim {
                rows.push((0..n).flat_map(|a| model.act(h, a)).collect());
            }
        }
        2 => {
            for swap in [false, true] {
                for h1 in 0..hdim {
                    for h2 in 0..hdim {
                        let mut row = Vec::with_capacity(n * n * n);
                        for a in 0..n {
                            for b in 0..n {
                                let (x1, x2) = if swap { (b, a) } else { (a, b) };
                                row.extend(model.bracket(&model.act(h1, x1), &model.act(h2, x2)));
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    rational_rank(rows)
}

fn criterion_10() -> Outcome {
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    let m = build_l_gamma(&sl2, 2, &f.zero()).unwrap();
    let c = rational_mat(m.c_matrix().unwrap());
    let v = rational_mat(m.v_matrix().unwrap());
    let model = RationalModel::new(m.lie(), taft_actions(&c, &v, 6, 2));
    let c1 = codimension(&m, 1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let o1 = oracle_codim(&model, 4, 1);
    ensure(c1 == 3 && o1 == 3, || format!("c_1 = {c1}, oracle {o1}"))?;
    let c2 = codimension(&m, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let o2 = oracle_codim(&model, 4, 2);
    ensure(c2 == o2, || format!("c_2 = {c2}, oracle {o2}"))?;
    ensure(c2 <= 216, || format!("c_2 = {c2} > 216"))?;

    let triv = HModuleLie::from_actions(sl2.clone(), make_trivial(2).unwrap(), vec![Mat::identity(&f, 3)]).unwrap();
    let plain = RationalModel::new(&sl2, vec![rational_mat(&Mat::identity(&f, 3))]);
    let t2 = codimension(&triv, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let ot2 = oracle_codim(&plain, 1, 2);
    ensure(t2 == 1 && ot2 == 1, || format!("ordinary c_2 = {t2}, oracle {ot2}"))?;

    let gl2 = make_dual_idempotent_example().map_err(|e| e.to_string())?;
    let w = HWord::new(vec![0, 1], vec![0, 0]).unwrap();
    let q = gl2.field().clone();
    ensure(is_h_identity(&gl2, &[(q.one(), w)]).unwrap(), || "[x^e0, y^e0] is not an identity".into())?;
    let diag = rational_mat(gl2.action(0));
    let gl_model = RationalModel::new(gl2.lie(), vec![diag]);
    let all_zero = (0..4).all(|a| {
        (0..4).all(|b| gl_model.bracket(&gl_model.act(0, a), &gl_model.act(0, b)).iter().all(Zero::is_zero))
    });
    ensure(all_zero, || "oracle: diagonal parts do not commute".into())?;
    Ok(format!("c_1 = 3, c_2 = {c2} <= 216, ordinary c_2 = 1"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_taftlie"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok(out.stdout)
}

fn criterion_11() -> Outcome {
    let runs: [&[&str]; 4] = [
        &["verify", "--family", "L_gamma", "--B", "sl2", "--m", "3", "--scalar", "0", "--seed", "7"],
        &["classify", "--family", "L_alpha", "--B", "sl2", "--m", "2", "--scalar", "1"],
        &["codim", "--family", "L_gamma", "--B", "sl2", "--m", "2", "--scalar", "0", "--n", "2"],
        &["iso", "--mode", "shift", "--family", "L_alpha", "--B", "sl2", "--m", "3", "--scalar", "1", "--k", "2"],
    ];
    for args in runs {
        let a = run_cli(args)?;
        let b = run_cli(args)?;
        ensure(!a.is_empty() && a == b, || format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands", runs.len()))
}

fn main() {
    let mut failed = 0;
    let mut report = |id: usize, title: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let res = f();
        let el = t.elapsed();
        let res = match (res, limit) {
            (Ok(_), Some(l)) if el > l => Err(format!("took {:.2}s, limit {}s", el.as_secs_f64(), l.as_secs())),
            (r, _) => r,
        };
        match res {
            Ok(msg) => println!("PASS [{id:>2}] {title}: {msg} ({:.2}s)", el.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{id:>2}] {title}: {msg} ({:.2}s)", el.as_secs_f64());
            }
        }
    };
    let secs = |s| Some(Duration::from_secs(s));
    report(1, "quantum Pascal identity, m <= 12", secs(1), &mut criterion_1);
    report(2, "Taft Hopf axioms, m = 2..6", secs(5), &mut criterion_2);
    let mut cached: Option<Vec<CorpusEntry>> = None;
    report(3, "construction soundness", secs(30), &mut || {
        let c = corpus()?;
        let r = criterion_3(&c);
        cached = Some(c);
        r
    });
    let corpus = cached.unwrap_or_default();
    report(4, "closed form of v^l against iteration", secs(10), &mut criterion_4);
    report(5, "graded identities on the corpus", None, &mut || criterion_5(&corpus));
    report(6, "H-simplicity certificates", None, &mut || criterion_6(&corpus));
    report(7, "equivalence of the two families", None, &mut criterion_7);
    report(8, "orbit law for L_alpha", None, &mut criterion_8);
    report(9, "recognition of L(B, 0)", None, &mut criterion_9);
    report(10, "codimension engine", secs(120), &mut criterion_10);
    report(11, "deterministic CLI reports", None, &mut criterion_11);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
