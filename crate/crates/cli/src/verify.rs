//! Cross-module invariant checks on random images.

use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dprt_core::{
    accumulate_partials, combine_partial_idprt, forward_dprt, inverse_dprt, is_prime, partial_dprt,
    partial_idprt, DprtError, Image, StripPlan,
};
use dprt_cost::{cycle_model, pareto_front, Method};
use dprt_sim::{run_fdprt, run_ifdprt, run_isfdprt, run_sfdprt};

use crate::args::{HeightPolicy, VerifyArgs};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideResult {
    pub n: usize,
    pub heights: Vec<usize>,
    pub roundtrip: bool,
    pub strips: bool,
    pub sim: bool,
    pub cycles: bool,
}

impl SideResult {
    pub fn passed(&self) -> bool {
        self.roundtrip && self.strips && self.sim && self.cycles
    }
}

pub fn heights(n: usize, bits: u32, policy: HeightPolicy) -> Result<Vec<usize>, CliError> {
    let mut hs: Vec<usize> = match policy {
        HeightPolicy::All => (2..=n).collect(),
        HeightPolicy::Front => pareto_front(n, bits)?.iter().map(|p| p.h).collect(),
    };
    hs.extend([2, n]);
    hs.sort_unstable();
    hs.dedup();
    Ok(hs)
}

fn random_image(rng: &mut StdRng, n: usize, bits: u32) -> Image {
    let max = (1u64 << bits) - 1;
    Image::from_fn(n, bits, |_, _| rng.gen_range(0..=max)).expect("valid side and width")
}

fn check_side(n: usize, args: &VerifyArgs, hs: &[usize]) -> Result<SideResult, CliError> {
    let bits = args.bits;
    let mut rng = StdRng::seed_from_u64(args.seed ^ (n as u64).rotate_left(32));
    let mut res = SideResult {
        n,
        heights: hs.to_vec(),
        roundtrip: true,
        strips: true,
        sim: true,
        cycles: true,
    };
    let cycles_ok = |m: Method, h: Option<usize>, mem_in: bool, total: u64| {
        cycle_model(m, n, bits, h, mem_in).is_ok_and(|c| c == total)
    };
    for index in 0..args.images {
        let img = random_image(&mut rng, n, bits);
        let r = forward_dprt(&img);
        res.roundtrip &= inverse_dprt(&r).as_ref() == Ok(&img);

        for &h in hs {
            let plan = StripPlan::new(n, h)?;
            let parts = (0..plan.strips())
                .map(|q| partial_dprt(&img, &plan, q))
                .collect::<Result<Vec<_>, _>>()?;
            res.strips &= accumulate_partials(&parts).as_ref() == Ok(&r);
            let backs = (0..plan.strips())
                .map(|q| partial_idprt(&r, &plan, q))
                .collect::<Result<Vec<_>, _>>()?;
            res.strips &= combine_partial_idprt(&backs, &r).as_ref() == Ok(&img);

            match run_sfdprt(&img, h) {
                Ok(run) => {
                    let mut got = run.output.values().to_vec();
                    if args.inject_fault && index == 0 && h == hs[0] {
                        got[0] ^= 1;
                    }
                    res.sim &= got == r.values();
                    res.cycles &= cycles_ok(Method::Sfdprt, Some(h), false, run.report.total);
                }
                Err(_) => res.sim = false,
            }
            for mem_in in [false, true] {
                match run_isfdprt(&r, h, mem_in) {
                    Ok(run) => {
                        res.sim &= run.output == img;
                        res.cycles &= cycles_ok(Method::Isfdprt, Some(h), mem_in, run.report.total);
                    }
                    Err(_) => res.sim = false,
                }
            }
        }
        match run_fdprt(&img) {
            Ok(run) => {
                res.sim &= run.output == r;
                res.cycles &= cycles_ok(Method::Fdprt, None, false, run.report.total);
            }
            Err(_) => res.sim = false,
        }
        match run_ifdprt(&r) {
            Ok(run) => {
                res.sim &= run.output == img;
                res.cycles &= cycles_ok(Method::Ifdprt, None, false, run.report.total);
            }
            Err(_) => res.sim = false,
        }
    }
    Ok(res)
}

/// Runs every side concurrently and returns results in argument order.
pub fn run_checks(args: &VerifyArgs) -> Result<Vec<SideResult>, CliError> {
    if args.n.is_empty() {
        return Err(CliError::Config("no side lengths given".into()));
    }
    if args.bits == 0 || args.bits > 16 {
        return Err(CliError::Config(format!("bits must be in 1..=16, got {}", args.bits)));
    }
    let mut plans = Vec::new();
    for &n in &args.n {
        if !is_prime(n as u64) {
            return Err(DprtError::NotPrime(n).into());
        }
        if n < 3 {
            return Err(CliError::Config("verify needs odd prime sides".into()));
        }
        plans.push((n, heights(n, args.bits, args.heights)?));
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = plans
            .iter()
            .map(|(n, hs)| s.spawn(move || check_side(*n, args, hs)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    })
}

pub fn render(results: &[SideResult], bits: u32) -> String {
    let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mut out = format!(
        "{:>5} {:>3}  {:<24} {:<9} {:<6} {:<4} {}\n",
        "N", "B", "heights", "roundtrip", "strips", "sim", "cycles"
    );
    for r in results {
        let hs: Vec<String> = r.heights.iter().map(usize::to_string).collect();
        let mut hs = hs.join(",");
        if hs.len() > 24 {
            hs = format!("{} values", r.heights.len());
        }
        writeln!(
            out,
            "{:>5} {:>3}  {:<24} {:<9} {:<6} {:<4} {}",
            r.n,
            bits,
            hs,
            mark(r.roundtrip),
            mark(r.strips),
            mark(r.sim),
            mark(r.cycles)
        )
        .unwrap();
    }
    out
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let results = run_checks(args)?;
    print!("{}", render(&results, args.bits));
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} side(s) failed verification")));
    }
    println!("all checks passed");
    Ok(())
}
