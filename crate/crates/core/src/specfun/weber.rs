//! Taylor-series continuation of Weber's equation y'' = (x²/4 - a) y.
//!
//! The equation has polynomial coefficients, so the Taylor coefficients about
//! any centre obey a short recurrence and every local series is entire.
//! Solutions are carried from point to point with steps short enough that the
//! local series converges without cancellation.

use super::kummer::CompensatedSum;

/// Value and slope of one solution at `x`, plus an absolute error estimate
/// for `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub y: f64,
    pub dy: f64,
    pub err: f64,
}

impl Node {
    pub fn new(x: f64, y: f64, dy: f64) -> Self {
        Self { x, y, dy, err: 0.0 }
    }
}

const MAX_TERMS: usize = 600;

/// Largest step taken from `x` for parameter `a`.
pub(crate) fn max_step(a: f64, x: f64) -> f64 {
    let reach = x.abs() + 0.5;
    let p = (reach * reach / 4.0 - a).abs().max(a.abs()).max(1.0);
    (1.5 / p.sqrt()).min(0.5)
}

pub(crate) struct StepOut {
    pub y: f64,
    pub dy: f64,
    pub abs_y: f64,
}

/// One Taylor step of length `h` (either sign) from (x0, y0, dy0).
pub(crate) fn taylor_step(a: f64, x0: f64, y0: f64, dy0: f64, h: f64) -> StepOut {
    if h == 0.0 {
        return StepOut { y: y0, dy: dy0, abs_y: y0.abs() };
    }
    // scaled coefficients b_k = c_k h^k, with
    // (k+1)(k+2) c_{k+2} = p0 c_k + p1 c_{k-1} + p2 c_{k-2}
    let h2 = h * h;
    let q0 = (x0 * x0 / 4.0 - a) * h2;
    let q1 = 0.5 * x0 * h2 * h;
    let q2 = 0.25 * h2 * h2;

    // window = [b_{k-2}, b_{k-1}, b_k, b_{k+1}]
    let mut w = [0.0, 0.0, y0, dy0 * h];
    let mut ysum = CompensatedSum::default();
    let mut dsum = CompensatedSum::default();
    ysum.add(w[2]);
    ysum.add(w[3]);
    dsum.add(w[3]);
    let mut abs_y = w[2].abs() + w[3].abs();
    let mut abs_d = w[3].abs();

    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let next = (q0 * w[2] + q1 * w[1] + q2 * w[0]) / ((kf + 1.0) * (kf + 2.0));
        w = [w[1], w[2], w[3], next];
        let order = kf + 2.0;
        ysum.add(next);
        dsum.add(order * next);
        abs_y += next.abs();
        abs_d += order * next.abs();
        let tail = order * (w[3].abs() + w[2].abs() + w[1].abs());
        if k > 3 && tail <= 1e-18 * (abs_y + abs_d) {
            break;
        }
    }
    StepOut { y: ysum.value(), dy: dsum.value() / h, abs_y }
}

/// Carries `from` to `to_x`, optionally recording every intermediate node.
pub(crate) fn propagate(a: f64, from: Node, to_x: f64, mut record: Option<&mut Vec<Node>>) -> Node {
    let mut node = from;
    if let Some(rec) = record.as_deref_mut() {
        rec.push(node);
    }
    while node.x != to_x {
        let dist = to_x - node.x;
        let hmax = max_step(a, node.x);
        let last = dist.abs() <= hmax * 1.000_001;
        let h = if last { dist } else { hmax.copysign(dist) };
        let out = taylor_step(a, node.x, node.y, node.dy, h);
        let kappa = (node.x * node.x / 4.0 - a).abs().max(1.0).sqrt();
        let env_old = node.y.abs() + node.dy.abs() / kappa;
        let env_new = out.y.abs() + out.dy.abs() / kappa;
        let amp = if env_old > 0.0 { (env_new / env_old).max(1.0) } else { 1.0 };
        node = Node {
            x: if last { to_x } else { node.x + h },
            y: out.y,
            dy: out.dy,
            err: node.err * amp + 4.0 * f64::EPSILON * out.abs_y,
        };
        if let Some(rec) = record.as_deref_mut() {
            rec.push(node);
        }
    }
    node
}

/// A solution tabulated on an ascending set of nodes; any point in range is
/// reached by one short Taylor step from the nearest node.
#[derive(Debug, Clone)]
pub struct SolutionTable {
    a: f64,
    nodes: Vec<Node>,
}

impl SolutionTable {
    /// Tabulates the solution through `start` out to `end_x`.
    pub fn build(a: f64, start: Node, end_x: f64) -> Self {
        let mut nodes = Vec::new();
        propagate(a, start, end_x, Some(&mut nodes));
        if end_x < start.x {
            nodes.reverse();
        }
        Self { a, nodes }
    }

    pub fn lo(&self) -> f64 {
        self.nodes[0].x
    }

    pub fn hi(&self) -> f64 {
        self.nodes[self.nodes.len() - 1].x
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Node nearest to `x`; `x` is clamped into the tabulated range.
    fn nearest(&self, x: f64) -> &Node {
        let idx = self.nodes.partition_point(|n| n.x < x);
        if idx == 0 {
            return &self.nodes[0];
        }
        if idx == self.nodes.len() {
            return &self.nodes[idx - 1];
        }
        let (l, r) = (&self.nodes[idx - 1], &self.nodes[idx]);
        if x - l.x <= r.x - x {
            l
        } else {
            r
        }
    }

    /// Solution at `x` (which may lie slightly outside the table).
    pub fn eval(&self, x: f64) -> Node {
        let n = *self.nearest(x);
        if n.x == x {
            return n;
        }
        propagate(self.a, n, x, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_is_ground_solution() {
        // a = 1/2: y = exp(-x²/4) solves the equation
        let start = Node::new(0.0, 1.0, 0.0);
        for &x in &[0.3, 1.0, 2.5, -3.0, 6.0] {
            let n = propagate(0.5, start, x, None);
            let exact = (-x * x / 4.0_f64).exp();
            assert!((n.y - exact).abs() < 1e-14, "x={x}: {} vs {exact}", n.y);
            assert!((n.dy + 0.5 * x * exact).abs() < 1e-14);
        }
    }

    #[test]
    fn table_matches_direct_propagation() {
        let a = 3.7;
        let start = Node::new(0.0, 0.0, 1.0);
        let table = SolutionTable::build(a, start, 4.0);
        for i in 0..=40 {
            let x = i as f64 * 0.1;
            let direct = propagate(a, start, x, None);
            let t = table.eval(x);
            assert!((direct.y - t.y).abs() < 1e-13 * (1.0 + direct.y.abs()));
        }
    }
}
