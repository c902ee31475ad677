use std::fs;
use std::io::Write;
use std::path::Path;

use dprt_core::{forward_dprt, inverse_dprt, Image, RadonArray};
use dprt_cost::export::{write_csv, CostRow};
use dprt_cost::{cycle_model, pareto_front_with, resource_model, Costing, Method};
use dprt_sim::{run_fdprt, run_ifdprt, run_isfdprt, run_sfdprt, CycleReport, Trace};

use crate::args::{CostArgs, Format, ForwardArgs, InverseArgs, ParetoArgs, SimMethod, SimulateArgs};
use crate::pgm::{self, Pgm, PgmFormat};
use crate::report::{CycleSection, ReportConfig, ReportFile};
use crate::{sinogram, CliError};

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, data: &[u8]) -> Result<(), CliError> {
    fs::write(path, data).map_err(|e| CliError::io(path, e))
}

/// Writes to `path`, or to stdout when it is `None`.
fn emit(path: Option<&Path>, data: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, data),
        None => std::io::stdout()
            .write_all(data)
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

pub fn read_image(path: &Path, bits: Option<u32>) -> Result<Image, CliError> {
    let pgm = pgm::parse(&read(path)?).map_err(|source| CliError::Pgm {
        path: path.to_path_buf(),
        source,
    })?;
    pgm.to_image(bits)
}

pub fn read_sinogram(path: &Path) -> Result<RadonArray, CliError> {
    sinogram::parse(&read(path)?).map_err(|source| CliError::Sinogram {
        path: path.to_path_buf(),
        source,
    })
}

fn write_image(path: &Path, img: &Image, format: PgmFormat) -> Result<(), CliError> {
    write(path, &pgm::write(&Pgm::from_image(img)?, format))
}

pub fn forward(args: &ForwardArgs) -> Result<(), CliError> {
    let img = read_image(&args.input, args.bits)?;
    let r = forward_dprt(&img);
    let bytes = if args.binary {
        sinogram::write_binary(&r)
    } else {
        sinogram::write_text(&r).into_bytes()
    };
    write(&args.out, &bytes)
}

pub fn inverse(args: &InverseArgs) -> Result<(), CliError> {
    let r = read_sinogram(&args.input)?;
    let img = inverse_dprt(&r)?;
    let format = if args.plain { PgmFormat::Plain } else { PgmFormat::Raw };
    write_image(&args.out, &img, format)
}

fn cost_method(m: SimMethod) -> Method {
    match m {
        SimMethod::Sfdprt => Method::Sfdprt,
        SimMethod::Fdprt => Method::Fdprt,
        SimMethod::Isfdprt => Method::Isfdprt,
        SimMethod::Ifdprt => Method::Ifdprt,
    }
}

fn need_height(m: SimMethod, h: Option<usize>) -> Result<usize, CliError> {
    h.ok_or_else(|| CliError::Config(format!("{} needs a strip height (-H)", cost_method(m))))
}

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let method = cost_method(args.method);
    let (report, trace, output_ok, result): (CycleReport, Trace, bool, Vec<u8>) = match args.method {
        SimMethod::Sfdprt | SimMethod::Fdprt => {
            let img = read_image(&args.input, args.bits)?;
            let run = match args.method {
                SimMethod::Sfdprt => run_sfdprt(&img, need_height(args.method, args.h)?)?,
                _ => run_fdprt(&img)?,
            };
            let ok = run.output == forward_dprt(&img);
            (run.report, run.trace, ok, sinogram::write_text(&run.output).into_bytes())
        }
        SimMethod::Isfdprt | SimMethod::Ifdprt => {
            let r = read_sinogram(&args.input)?;
            let reference = inverse_dprt(&r)?;
            let run = match args.method {
                SimMethod::Isfdprt => run_isfdprt(&r, need_height(args.method, args.h)?, args.use_mem_in)?,
                _ => run_ifdprt(&r)?,
            };
            let ok = run.output == reference;
            let bytes = pgm::write(&Pgm::from_image(&run.output)?, PgmFormat::Raw);
            (run.report, run.trace, ok, bytes)
        }
    };
    let c = report.config;
    let closed_form = cycle_model(method, c.n, c.bits, c.h, c.use_mem_in)?;
    let resources = resource_model(method, c.n, c.bits, c.h)?;
    let file = ReportFile::from_simulation(&report, closed_form, Some(resources), output_ok);

    if let Some(p) = &args.trace {
        write(p, trace.to_string().as_bytes())?;
    }
    if let Some(p) = &args.out {
        write(p, &result)?;
    }
    let text = match args.format {
        Format::Json => file.to_json(),
        Format::Csv => file.phases_csv(),
    };
    emit(args.report.as_deref(), text.as_bytes())?;
    if !file.passed() {
        return Err(CliError::Verification(format!(
            "simulation diverged: output {}, {} cycles against closed form {}",
            if output_ok { "matches" } else { "differs from reference" },
            report.total,
            closed_form
        )));
    }
    Ok(())
}

pub fn cost(args: &CostArgs) -> Result<(), CliError> {
    let h = if args.method.is_scalable() { args.h } else { None };
    let text = match args.format {
        Format::Json => {
            let cycles = cycle_model(args.method, args.n, args.bits, h, args.use_mem_in)?;
            let file = ReportFile {
                method: args.method.name().to_string(),
                config: ReportConfig {
                    n: args.n,
                    bits: args.bits,
                    h,
                    use_mem_in: args.use_mem_in,
                },
                cycles: CycleSection {
                    total: cycles,
                    closed_form: cycles,
                    phases: Vec::new(),
                },
                resources: Some(resource_model(args.method, args.n, args.bits, h)?),
                verification: None,
            };
            file.to_json().into_bytes()
        }
        Format::Csv => {
            let row = CostRow::evaluate(args.method, args.n, args.bits, h, args.use_mem_in)?;
            csv_bytes(&[row])?
        }
    };
    emit(args.out.as_deref(), &text)
}

fn csv_bytes(rows: &[CostRow]) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).map_err(|e| CliError::Config(e.to_string()))?;
    Ok(buf)
}

/// Front rows followed by the non-scalable baselines.
pub fn pareto_rows(n: usize, bits: u32, inverse: bool) -> Result<Vec<CostRow>, CliError> {
    let costing = if inverse { Costing::Inverse } else { Costing::Forward };
    let mut rows: Vec<CostRow> = pareto_front_with(n, bits, costing)?.iter().map(CostRow::from).collect();
    let fastest = if inverse { Method::Ifdprt } else { Method::Fdprt };
    for m in [Method::Serial, Method::Systolic, fastest] {
        rows.push(CostRow::evaluate(m, n, bits, None, false)?);
    }
    Ok(rows)
}

pub fn pareto(args: &ParetoArgs) -> Result<(), CliError> {
    let rows = pareto_rows(args.n, args.bits, args.inverse)?;
    let bytes = match args.format {
        Format::Csv => csv_bytes(&rows)?,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s.into_bytes()
        }
    };
    emit(args.out.as_deref(), &bytes)
}
