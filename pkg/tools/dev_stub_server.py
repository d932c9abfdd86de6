"""Stub endpoint that genuinely solves frequency-count prompts."""
import json, re, sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

class Handler(BaseHTTPRequestHandler):
    def do_POST(self):
        n = int(self.headers.get("Content-Length", 0))
        payload = json.loads(self.rfile.read(n))
        prompt = payload["messages"][0]["content"]
        m = re.match(r'How many times does "(.+?)" appear in the following text: (.*)\?\n', prompt, re.S)
        if m:
            target, text = m.group(1), m.group(2)
            answer = str(text.split().count(target))
        else:
            answer = "unsure"
        body = {"choices": [{"message": {"content": f"<answer>{answer}</answer>"}}]}
        raw = json.dumps(body).encode()
        self.send_response(200)
        self.send_header("Content-Length", str(len(raw)))
        self.end_headers()
        self.wfile.write(raw)
    def log_message(self, *a): pass

print("ready", flush=True)
ThreadingHTTPServer(("127.0.0.1", int(sys.argv[1])), Handler).serve_forever()
