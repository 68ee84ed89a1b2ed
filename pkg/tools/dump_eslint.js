// Run from the root of an unpacked eslint 8.57.0 package: node dump_eslint.js OUT.json
const fs = require('fs'); const path = require('path');
const dir = path.join(process.cwd(), 'lib/rules');
const out = [];
for (const f of fs.readdirSync(dir).filter(f => f.endsWith('.js') && f !== 'index.js').sort()) {
  let r;
  try { r = require(path.join(dir, f)); } catch (e) { out.push({name: f.slice(0,-3), error: String(e)}); continue; }
  const m = r.meta || {};
  out.push({name: f.slice(0,-3), type: m.type, description: (m.docs||{}).description, deprecated: !!m.deprecated, replacedBy: m.replacedBy || [], schema: m.schema === undefined ? null : m.schema});
}
fs.writeFileSync(process.argv[2] || 'eslint_meta.json', JSON.stringify(out, null, 1));
console.log(out.length, out.filter(x=>x.error).length);
