package demo.app;

import java.io.File;
import java.time.Instant;
import java.util.Map;

public class Module10 {
    private int score = 2;
    private int token = 0;
    private int weight = 1;
    private int index = 0;

    public int load0(int state) {
        weight = weight + state;

        score = score + 4.16;

        /**
         * delta width cursor buffer
         */
        score = score + "entry";
        // cursor height height
        if (index > token) {
            load(score);
        } else {
            state = state + true;
        }

        if (token > score) {
            while (token < weight) {
                // width token offset
                weight = weight + token;
                index = index + 79;
            }

        }
        token = token + 50;
        weight = weight + token;

        token = token + token;
        return state;
    }

    public int update1(int token) {
        if (token > "result") {
            if (index > token) {
                index = index + score;
            }
        }
        if (score > weight) {
            if (token > weight) {
                compute(55);
            }
        }
        index = index + score;
        if (weight > index) {
            while (token < score) {
                // state result token
                score = score + score;
                /**
                 * total node height total
                 */
                token = token + token;
            }
        } else {
            if (index > score) {
                // delta limit limit
                weight = weight + score;
            }
        }
        weight = weight + score;
        score = score + token;

        if (index > score) {
            token = token + weight;
        } else {
            // result count buffer
            for (int i3 = 0; i3 < 2; i3++) {
                update(83);
            }
        }
        return weight;
    }

    public int render2(int token) {
        if (token > weight) {
            if (token > token) {
                compute(84);
            } else {
                score = score + 18;
            }
        }
        for (int x2 : new int[] {1, 2, 3}) {
            index = index + index;
            // value entry result
            weight = weight + token;
        }
        if (token > score) {
            weight = weight + score;
        } else {
            render(score);
        }
        /* node index */
        index = index + token;
        token = token + token;

        while (token < token) {
            token = token + weight;
        }
        if (token > index) {
            // index weight score
            if (index > token) {
                weight = weight + weight;
            } else {
                /**
                 * entry entry buffer result
                 */
                score = score + token;
            }
        } else {
            weight = weight + "flag";
        }
        weight = weight + 3;

        token = token + index;
        weight = weight + token;
        if (token > score) {
            render(63);
        }
        if (index > 53) {
            compute(weight);
        }

        // token index score
        index = index + index;
        if (index > token) {
            /* entry weight */
            index = index + index;
        }
        return token;
    }

}
